#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hopfcm/double_poset.hpp"
#include "hopfcm/errors.hpp"
#include "hopfcm/ground_set.hpp"
#include "hopfcm/mixed_graph.hpp"

namespace hopfcm {

using BigInt = boost::multiprecision::cpp_int;

enum class Family { MixedGraph, DoublePoset };

/// Geometric Hopf submonoids understood by the library.
enum class SubmonoidId { Edgeless, Directed, InversionFree, Full };

std::string_view to_string(Family f);
std::string_view to_string(SubmonoidId s);
Family parse_family(std::string_view name);
SubmonoidId parse_submonoid(std::string_view name);
bool valid_for(SubmonoidId s, Family f);
/// edgeless for mixed graphs, inversion-free for double posets
SubmonoidId natural_submonoid(Family f);

/// A basis element h of one of the implemented linearized Hopf monoids.
/// Immutable; all operations are pure.
class Structure {
 public:
  Structure(MixedGraph g) : data_(std::move(g)) {}
  Structure(DoublePoset p) : data_(std::move(p)) {}

  Family family() const;
  const GroundSet& ground() const;
  int size() const { return ground().size(); }

  const MixedGraph* mixed_graph() const { return std::get_if<MixedGraph>(&data_); }
  const DoublePoset* double_poset() const { return std::get_if<DoublePoset>(&data_); }

  /// Delta_{S, N\S}(h) != 0. Throws InvalidInput when S is not a subset of N.
  bool delta_defined(Mask s) const;
  /// h|_T / S exists, for S ⊆ T ⊆ N given in this structure's indexing.
  bool minor_defined(Mask s, Mask t) const;
  /// The substructure induced on m; restriction and contraction both reduce to this.
  Structure induced(Mask m) const;
  /// Membership of the induced substructure on m, without building it.
  bool induced_in_submonoid(Mask m, SubmonoidId s) const;
  /// Membership of the minor h|_T / S; the minor must be defined.
  bool minor_in_submonoid(Mask s, Mask t, SubmonoidId sub) const {
    return induced_in_submonoid(t & ~s, sub);
  }

  friend bool operator==(const Structure&, const Structure&) = default;

 private:
  std::variant<MixedGraph, DoublePoset> data_;
};

/// S ⊆ T ⊆ N.
struct MinorKey {
  Mask lower = 0;  // S
  Mask upper = 0;  // T
  friend bool operator==(const MinorKey&, const MinorKey&) = default;
  friend auto operator<=>(const MinorKey&, const MinorKey&) = default;
};

/// Ordered blocks of a set composition.
using SetComposition = std::vector<Mask>;
/// Integer composition (block sizes).
using Composition = std::vector<int>;

/// Coarser compositions first (fewer parts), then lexicographically
/// decreasing; gives M(2) + 2M(1,1) and F(2,1) + F(1,2) - F(1,1,1).
struct CoarseFirst {
  bool operator()(const Composition& a, const Composition& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a > b;
  }
};

using CompositionCounts = std::map<Composition, BigInt, CoarseFirst>;

std::optional<Structure> restriction(const Structure& h, Mask t);
std::optional<Structure> contraction(const Structure& h, Mask s);
std::optional<Structure> minor_of(const Structure& h, const MinorKey& key);
/// Family product; throws InvalidInput on overlapping ground sets or mixed kinds.
Structure product(const Structure& x, const Structure& y);
bool delta_defined(const Structure& h, Mask s);
/// Throws InvalidInput when the submonoid does not belong to the family.
bool in_submonoid(const Structure& h, SubmonoidId s);

/// `values[i]` is f of element i, all >= 1. Empty levels are skipped.
bool is_s_proper(const Structure& h, std::span<const int> values, SubmonoidId s);

/// Brute-force count of S-proper maps N -> [k]; throws ResourceLimitExceeded
/// when k^|N| exceeds limits.max_enumeration.
BigInt count_s_proper(const Structure& h, SubmonoidId s, int k, const Limits& limits = {});

/// Calls visit(blocks) for every set composition of `ground`.
void for_each_set_composition(Mask ground, const std::function<void(const SetComposition&)>& visit);

/// Number of proper set compositions per block-size composition.
CompositionCounts proper_set_composition_counts(const Structure& h, SubmonoidId s);

/// sum_j (#proper set compositions with j blocks) * C(k, j)
BigInt aggregate_count(const CompositionCounts& counts, int k);

BigInt binomial(long long n, long long k);

}  // namespace hopfcm
