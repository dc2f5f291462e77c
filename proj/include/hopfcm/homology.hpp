#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfcm/exact_rank.hpp"
#include "hopfcm/hopf_complexes.hpp"
#include "hopfcm/simplicial_complex.hpp"
#include "hopfcm/structure.hpp"

namespace hopfcm {

/// Reduced Betti numbers for dimensions -1 ... dim; empty for the void complex.
struct HomologyProfile {
  std::vector<std::size_t> betti;  // betti[i] is the rank in dimension i - 1

  bool empty() const { return betti.empty(); }
  int top_dimension() const { return static_cast<int>(betti.size()) - 2; }
  std::size_t at(int dim) const {
    const int i = dim + 1;
    return (i < 0 || i >= static_cast<int>(betti.size())) ? 0 : betti[static_cast<std::size_t>(i)];
  }
  /// Lowest dimension below `bound` with a nonzero Betti number.
  std::optional<int> first_nonzero_below(int bound) const;

  friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

HomologyProfile reduced_betti(const SimplicialComplex& c, Field field = {});
/// Homology of the quotient chain complex spanned by faces of total not in sub.
HomologyProfile relative_betti(const RelativePair& p, Field field = {});

struct CmFailure {
  std::vector<std::string> face;    // offending face (labels), for link checks
  std::optional<MinorKey> minor;    // offending minor, for the combinatorial criterion
  int dimension = 0;
  std::size_t betti = 0;
  std::string reason;
};

struct CmReport {
  bool verdict = true;
  std::vector<CmFailure> failures;
};

/// Every face link has vanishing reduced homology below its dimension.
CmReport is_cm(const SimplicialComplex& c, Field field = {});
/// Every face link pair has vanishing relative homology below the dimension
/// of the total link.
CmReport is_relatively_cm(const RelativePair& p, Field field = {});

/// For every S ⊂ T ⊆ N with |T \ S| >= 2 and h|_T/S defined and outside the
/// submonoid: gamma of the minor is pure of dimension dim sigma(minor) - 1,
/// and connected whenever that dimension is at least 1.
CmReport theorem1_combinatorial(const Structure& h, SubmonoidId s, const Limits& limits = {});

enum class LemmaOutcome { Holds, Violated, Skipped };

struct LemmaResult {
  LemmaOutcome outcome = LemmaOutcome::Skipped;
  std::string detail;        // skip reason or violated dimension
  HomologyProfile gamma_homology;
};

/// Empirical check of the interval-filter homology lemma: when sigma(M) is
/// Cohen-Macaulay, F has only length-2 minimal intervals and Gamma(F, M) is
/// connected, reduced homology of Gamma(F, M) vanishes below dim sigma(M) - 1.
/// Instances violating a hypothesis are skipped.
LemmaResult lemma6_check(const IntervalFilter& ifm, Field field = {}, const Limits& limits = {});

}  // namespace hopfcm
