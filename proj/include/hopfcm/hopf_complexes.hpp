#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hopfcm/simplicial_complex.hpp"
#include "hopfcm/structure.hpp"

namespace hopfcm {

/// Order complex of the nonempty proper subsets S with Delta_{S, N\S}(h) != 0.
/// Vertices are labeled "a|b|d" and ordered by size, then by mask.
SimplicialComplex sigma(const Structure& h, const Limits& limits = {});

/// Chains of sigma(h) having a consecutive minor outside the submonoid. The
/// void complex exactly when h itself lies in the submonoid.
SimplicialComplex gamma(const Structure& h, SubmonoidId s, const Limits& limits = {});

RelativePair sigma_gamma_pair(const Structure& h, SubmonoidId s, const Limits& limits = {});

using Interval = std::pair<Mask, Mask>;  // [S, T] with S ⊆ T

/// A collection M of subsets of [n] (containing ∅ and [n]) together with an
/// up-closed family F of its intervals.
class IntervalFilter {
 public:
  /// Validates membership of ∅ and [n], intervals inside M, and up-closure.
  IntervalFilter(int n, std::vector<Mask> members, std::set<Interval> filter,
                 std::vector<std::string> labels = {});

  /// M = {S : Delta_{S, N\S}(h) != 0}, F = {[S, T] : h|_T / S not in s}.
  static IntervalFilter from_structure(const Structure& h, SubmonoidId s);
  /// Up-closure in Int(M) of the given intervals.
  static IntervalFilter generated(int n, std::vector<Mask> members,
                                  const std::vector<Interval>& generators,
                                  std::vector<std::string> labels = {});

  int n() const { return n_; }
  const std::vector<Mask>& members() const { return members_; }
  const std::set<Interval>& filter() const { return filter_; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool contains(const Interval& iv) const { return filter_.count(iv) != 0; }
  std::vector<Interval> minimal_intervals() const;

  /// |T \ S|
  static int length(const Interval& iv) { return popcount(iv.second & ~iv.first); }

 private:
  int n_;
  std::vector<Mask> members_;  // sorted by size, then mask
  std::set<Interval> filter_;
  std::vector<std::string> labels_;
};

/// (order complex of M \ {∅, [n]}, chains with some consecutive interval in F).
RelativePair interval_gamma(const IntervalFilter& ifm, const Limits& limits = {});

}  // namespace hopfcm
