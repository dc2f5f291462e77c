#pragma once

#include <string>
#include <vector>

#include "hopfcm/polynomial.hpp"
#include "hopfcm/structure.hpp"

namespace hopfcm {

/// Integer h-vector (h_0, ..., h_d) of a degree-d polynomial. Stored at full
/// length; display() drops trailing zeros.
struct HVector {
  std::vector<BigInt> entries;

  std::string display() const;
  friend bool operator==(const HVector&, const HVector&) = default;
};

/// Interpolates count_s_proper at k = 0..|N| and re-checks the result at
/// k = |N| + 1 against a fresh brute-force count; throws ConsistencyError on
/// mismatch.
RationalPolynomial char_polynomial(const Structure& h, SubmonoidId s, const Limits& limits = {});

/// h_j = sum_{i<=j} (-1)^i C(d+1, i) p(j - i). Throws InvalidInput when p is
/// not integer-valued at 0..d.
HVector w_transform(const RationalPolynomial& p);

/// w_transform of k -> chi(h, k + 1).
HVector h_vector_shifted(const Structure& h, SubmonoidId s, const Limits& limits = {});

enum class QSymBasis { Monomial, Fundamental };

/// Degree-n quasisymmetric function with integer coefficients; zero
/// coefficients are omitted.
struct QSymExpansion {
  QSymBasis basis = QSymBasis::Monomial;
  int degree = 0;
  CompositionCounts coefficients;

  /// "F(2,1) + F(1,2) - F(1,1,1)"
  std::string display() const;
  friend bool operator==(const QSymExpansion&, const QSymExpansion&) = default;
};

/// "2,1"
std::string render_composition(const Composition& alpha);

/// Compositions of n.
std::vector<Composition> compositions(int n);
/// Compositions refining alpha (alpha included).
std::vector<Composition> refinements(const Composition& alpha);

QSymExpansion qsym_monomial(const Structure& h, SubmonoidId s);
/// M_alpha = sum over beta refining alpha of (-1)^(l(beta) - l(alpha)) F_beta.
QSymExpansion to_fundamental(const QSymExpansion& q);
/// F_alpha = sum over beta refining alpha of M_beta.
QSymExpansion to_monomial(const QSymExpansion& q);

bool is_h_positive(const HVector& v);
/// Nonnegative coefficients; the expansion must be in the fundamental basis.
bool is_f_positive(const QSymExpansion& q);

/// Order polynomial of a double poset, cross-checked against a direct count
/// of p-partitions (ConsistencyError on mismatch).
RationalPolynomial order_polynomial(const DoublePoset& p, const Limits& limits = {});

}  // namespace hopfcm
