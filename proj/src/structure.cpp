#include "hopfcm/structure.hpp"

#include <algorithm>

namespace hopfcm {

std::string_view to_string(Family f) {
  return f == Family::MixedGraph ? "mixed-graph" : "double-poset";
}

std::string_view to_string(SubmonoidId s) {
  switch (s) {
    case SubmonoidId::Edgeless: return "edgeless";
    case SubmonoidId::Directed: return "directed";
    case SubmonoidId::InversionFree: return "inversion-free";
    case SubmonoidId::Full: return "full";
  }
  return "full";
}

Family parse_family(std::string_view name) {
  if (name == "mixed-graph") return Family::MixedGraph;
  if (name == "double-poset") return Family::DoublePoset;
  throw InvalidInput("unknown family '" + std::string(name) + "'");
}

SubmonoidId parse_submonoid(std::string_view name) {
  for (auto s : {SubmonoidId::Edgeless, SubmonoidId::Directed, SubmonoidId::InversionFree,
                 SubmonoidId::Full}) {
    if (name == to_string(s)) return s;
  }
  throw InvalidInput("unknown submonoid '" + std::string(name) + "'");
}

bool valid_for(SubmonoidId s, Family f) {
  switch (s) {
    case SubmonoidId::Full: return true;
    case SubmonoidId::Edgeless:
    case SubmonoidId::Directed: return f == Family::MixedGraph;
    case SubmonoidId::InversionFree: return f == Family::DoublePoset;
  }
  return false;
}

SubmonoidId natural_submonoid(Family f) {
  return f == Family::MixedGraph ? SubmonoidId::Edgeless : SubmonoidId::InversionFree;
}

Family Structure::family() const {
  return std::holds_alternative<MixedGraph>(data_) ? Family::MixedGraph : Family::DoublePoset;
}

const GroundSet& Structure::ground() const {
  return std::visit([](const auto& x) -> const GroundSet& { return x.ground(); }, data_);
}

bool Structure::delta_defined(Mask s) const {
  if (!ground().contains(s)) throw InvalidInput("subset is not contained in the ground set");
  return std::visit([s](const auto& x) { return x.coproduct_support(s); }, data_);
}

bool Structure::minor_defined(Mask s, Mask t) const {
  if (!is_subset(s, t) || !ground().contains(t)) {
    throw InvalidInput("minor key must satisfy S ⊆ T ⊆ N");
  }
  if (!delta_defined(t)) return false;
  // Delta_{S, T\S}(h|_T): both families restrict to the induced substructure.
  return std::visit([s, t](const auto& x) { return x.coproduct_support_within(s, t); }, data_);
}

Structure Structure::induced(Mask m) const {
  return std::visit([m](const auto& x) { return Structure(x.induced(m)); }, data_);
}

bool Structure::induced_in_submonoid(Mask m, SubmonoidId s) const {
  if (!valid_for(s, family())) {
    throw InvalidInput(std::string("submonoid '") + std::string(to_string(s)) +
                       "' does not apply to " + std::string(to_string(family())));
  }
  switch (s) {
    case SubmonoidId::Full: return true;
    case SubmonoidId::Edgeless: return mixed_graph()->induced_is_edgeless(m);
    case SubmonoidId::Directed: return mixed_graph()->induced_has_no_undirected(m);
    case SubmonoidId::InversionFree: return double_poset()->induced_inversion_free(m);
  }
  return false;
}

std::optional<Structure> restriction(const Structure& h, Mask t) {
  if (!h.delta_defined(t)) return std::nullopt;
  return h.induced(t);
}

std::optional<Structure> contraction(const Structure& h, Mask s) {
  if (!h.delta_defined(s)) return std::nullopt;
  return h.induced(h.ground().full() & ~s);
}

std::optional<Structure> minor_of(const Structure& h, const MinorKey& key) {
  if (!h.minor_defined(key.lower, key.upper)) return std::nullopt;
  return h.induced(key.upper & ~key.lower);
}

Structure product(const Structure& x, const Structure& y) {
  if (x.family() != y.family()) throw InvalidInput("product of structures of different kinds");
  if (x.family() == Family::MixedGraph) return disjoint_union(*x.mixed_graph(), *y.mixed_graph());
  return dp_product(*x.double_poset(), *y.double_poset());
}

bool delta_defined(const Structure& h, Mask s) { return h.delta_defined(s); }

bool in_submonoid(const Structure& h, SubmonoidId s) {
  return h.induced_in_submonoid(h.ground().full(), s);
}

namespace {

// Consecutive level unions must give defined minors lying in the submonoid;
// empty levels are skipped.
bool levels_proper(const Structure& h, std::span<const Mask> levels, SubmonoidId s) {
  Mask below = 0;
  for (Mask level : levels) {
    if (level == 0) continue;
    const Mask upto = below | level;
    if (!h.minor_defined(below, upto) || !h.minor_in_submonoid(below, upto, s)) return false;
    below = upto;
  }
  return true;
}

}  // namespace

bool is_s_proper(const Structure& h, std::span<const int> values, SubmonoidId s) {
  if (values.size() != static_cast<std::size_t>(h.size())) {
    throw InvalidInput("function is not total on the ground set");
  }
  std::vector<int> distinct(values.begin(), values.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (!distinct.empty() && distinct.front() < 1) throw InvalidInput("function values must be positive");
  std::vector<Mask> levels;
  for (int level : distinct) {
    Mask m = 0;
    for (int i = 0; i < h.size(); ++i) {
      if (values[static_cast<std::size_t>(i)] == level) m |= Mask{1} << i;
    }
    levels.push_back(m);
  }
  return levels_proper(h, levels, s);
}

BigInt count_s_proper(const Structure& h, SubmonoidId s, int k, const Limits& limits) {
  if (k < 0) throw InvalidInput("k must be nonnegative");
  if (!valid_for(s, h.family())) throw InvalidInput("submonoid does not apply to this family");
  const int n = h.size();
  if (n == 0) return 1;
  if (k == 0) return 0;
  BigInt total = 1;
  for (int i = 0; i < n; ++i) total *= k;
  if (total > limits.max_enumeration) {
    throw ResourceLimitExceeded("enumeration of " + total.str() + " maps exceeds the configured limit");
  }
  std::vector<int> f(static_cast<std::size_t>(n), 1);
  std::vector<Mask> levels(static_cast<std::size_t>(k), 0);
  std::uint64_t count = 0;
  while (true) {
    std::fill(levels.begin(), levels.end(), 0);
    for (int i = 0; i < n; ++i) levels[static_cast<std::size_t>(f[static_cast<std::size_t>(i)] - 1)] |= Mask{1} << i;
    if (levels_proper(h, levels, s)) ++count;
    int i = 0;
    while (i < n && f[static_cast<std::size_t>(i)] == k) f[static_cast<std::size_t>(i++)] = 1;
    if (i == n) break;
    ++f[static_cast<std::size_t>(i)];
  }
  return BigInt(count);
}

namespace {

void compose(Mask rest, SetComposition& blocks,
             const std::function<void(const SetComposition&)>& visit) {
  if (rest == 0) {
    visit(blocks);
    return;
  }
  // nonempty submasks of rest
  for (Mask b = rest; b != 0; b = (b - 1) & rest) {
    blocks.push_back(b);
    compose(rest & ~b, blocks, visit);
    blocks.pop_back();
  }
}

}  // namespace

void for_each_set_composition(Mask ground, const std::function<void(const SetComposition&)>& visit) {
  SetComposition blocks;
  compose(ground, blocks, visit);
}

CompositionCounts proper_set_composition_counts(const Structure& h, SubmonoidId s) {
  if (!valid_for(s, h.family())) {
    throw InvalidInput("submonoid does not apply to this family");
  }
  CompositionCounts counts;
  // Prefix-pruned enumeration: a block is appended only when the new
  // consecutive minor is defined and lies in the submonoid.
  const Mask full = h.ground().full();
  Composition sizes;
  std::function<void(Mask)> extend = [&](Mask below) {
    if (below == full) {
      ++counts[sizes];
      return;
    }
    const Mask rest = full & ~below;
    for (Mask b = rest; b != 0; b = (b - 1) & rest) {
      const Mask upto = below | b;
      if (!h.minor_defined(below, upto) || !h.minor_in_submonoid(below, upto, s)) continue;
      sizes.push_back(popcount(b));
      extend(upto);
      sizes.pop_back();
    }
  };
  extend(0);
  return counts;
}

BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt aggregate_count(const CompositionCounts& counts, int k) {
  BigInt total = 0;
  for (const auto& [alpha, c] : counts) total += c * binomial(k, static_cast<long long>(alpha.size()));
  return total;
}

}  // namespace hopfcm
