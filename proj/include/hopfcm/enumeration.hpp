#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfcm/homology.hpp"
#include "hopfcm/invariants.hpp"
#include "hopfcm/structure.hpp"

namespace hopfcm {

/// Relabels h onto "a", "b", ... by the bijection minimizing its adjacency
/// encoding; equal results exactly for isomorphic structures.
Structure canonical_structure(const Structure& h);
/// Compact serialization of canonical_structure(h); the deduplication key.
std::string canonical_form(const Structure& h);

/// One representative per isomorphism class on exactly n elements, labeled
/// "a", "b", ..., in canonical-code order.
std::vector<Structure> enumerate_mixed_graphs(int n);
std::vector<Structure> enumerate_double_posets(int n);
std::vector<Structure> enumerate_structures(Family family, int n);

/// Largest n accepted by the exhaustive enumerators.
int enumeration_cap(Family family);

/// Everything the scans and the survey report about one structure.
struct StructureAnalysis {
  std::string canonical;
  HVector h_vector;
  bool h_positive = false;
  bool f_positive = false;
  bool theorem1 = false;
  bool relatively_cm = false;
  /// noncrossing (mixed graphs, directed) or inversion-to-descent (double
  /// posets, inversion-free); absent for other submonoids.
  std::optional<bool> characterization;
  bool sigma_vanishes_below_top = false;  // reduced homology of sigma below dim sigma
  bool sigma_acyclic = false;             // reduced homology of sigma vanishes everywhere
};

StructureAnalysis analyze(const Structure& h, SubmonoidId s, const Limits& limits = {});

struct ScanSummary {
  Family family = Family::MixedGraph;
  SubmonoidId submonoid = SubmonoidId::Full;
  int max_size = 0;
  std::size_t structures = 0;
  std::size_t sigma_violations = 0;          // homology below top dimension
  std::size_t sigma_literal_violations = 0;  // any nonzero reduced homology
  /// agreement[t][r]: theorem-1 verdict t against homological verdict r
  std::size_t agreement[2][2] = {{0, 0}, {0, 0}};
  std::vector<std::string> disagreements;  // canonical forms

  bool full_agreement() const { return agreement[0][1] == 0 && agreement[1][0] == 0; }
};

/// All structures on 0..n elements up to relabeling.
ScanSummary cm_hopf_scan(Family family, SubmonoidId s, int n, const Limits& limits = {});

}  // namespace hopfcm
