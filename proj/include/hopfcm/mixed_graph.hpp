#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hopfcm/ground_set.hpp"

namespace hopfcm {

using LabelPair = std::pair<std::string, std::string>;
using IndexPair = std::pair<int, int>;

/// Simple graph with undirected and directed edges and no directed cycle.
class MixedGraph {
 public:
  MixedGraph() = default;

  /// Validates simplicity and acyclicity; each violation has its own
  /// ValidationErrorKind.
  static MixedGraph from_edges(std::vector<std::string> vertices,
                               const std::vector<LabelPair>& undirected,
                               const std::vector<LabelPair>& directed);

  /// Edgeless graph.
  static MixedGraph discrete(std::vector<std::string> vertices);

  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }

  Mask undirected_neighbors(int v) const { return undirected_[static_cast<std::size_t>(v)]; }
  Mask out_neighbors(int v) const { return out_[static_cast<std::size_t>(v)]; }

  /// Undirected edges as (i, j) with i < j, lexicographically sorted.
  std::vector<IndexPair> undirected_edges() const;
  /// Directed edges (tail, head), lexicographically sorted.
  std::vector<IndexPair> directed_edges() const;

  bool has_edges() const;
  bool has_undirected_edges() const;

  /// No directed edge leaves `first`: the coproduct along (first, rest) is nonzero.
  bool coproduct_support(Mask first) const { return coproduct_support_within(first, ground_.full()); }
  /// Coproduct support of `first` inside the induced subgraph on `within`.
  bool coproduct_support_within(Mask first, Mask within) const;
  bool induced_is_edgeless(Mask m) const;
  bool induced_has_no_undirected(Mask m) const;

  MixedGraph induced(Mask m) const;

  friend bool operator==(const MixedGraph&, const MixedGraph&) = default;

 private:
  MixedGraph(GroundSet ground, std::vector<Mask> undirected, std::vector<Mask> out)
      : ground_(std::move(ground)), undirected_(std::move(undirected)), out_(std::move(out)) {}

  friend MixedGraph disjoint_union(const MixedGraph&, const MixedGraph&);
  friend MixedGraph mixed_graph_from_masks(GroundSet, std::vector<Mask>, std::vector<Mask>);

  GroundSet ground_;
  std::vector<Mask> undirected_;  // symmetric adjacency
  std::vector<Mask> out_;         // out_[u] has bit v for each edge u -> v
};

/// Builds a graph from adjacency masks; checks symmetry, simplicity and acyclicity.
MixedGraph mixed_graph_from_masks(GroundSet ground, std::vector<Mask> undirected,
                                  std::vector<Mask> out);

MixedGraph disjoint_union(const MixedGraph& g, const MixedGraph& h);

/// Reachability order of a mixed graph: m <= n iff a directed path runs from n to m.
class InducedPoset {
 public:
  explicit InducedPoset(const MixedGraph& g);

  const GroundSet& carrier() const { return carrier_; }
  bool leq(int m, int n) const { return (down_[static_cast<std::size_t>(n)] >> m) & 1u; }
  bool less(int m, int n) const { return m != n && leq(m, n); }

  Mask down_closure(Mask m) const;
  Mask up_closure(Mask m) const;
  /// {z : a <= z <= b for some a, b in m}
  Mask convex_hull(Mask m) const;
  bool is_down_set(Mask m) const { return down_closure(m) == m; }

 private:
  GroundSet carrier_;
  std::vector<Mask> down_;  // down_[n] = {m : m <= n}
  std::vector<Mask> up_;    // up_[m] = {n : m <= n}
};

struct CrossingPair {
  IndexPair e;
  IndexPair f;
  bool e_crosses_f = false;  // the ideal is generated by e
  bool f_crosses_e = false;  // the ideal is generated by f
};

/// Unordered pairs of vertex-disjoint undirected edges that cross in at least
/// one orientation.
std::vector<CrossingPair> crossing_pairs(const MixedGraph& g);
bool is_noncrossing(const MixedGraph& g);

/// f(u) < f(v) on every directed (u, v) and f(u) != f(v) on every undirected uv.
/// `colors[i]` is the color of element i; values must lie in [1, k].
bool is_strong_coloring(const MixedGraph& g, std::span<const int> colors, int k);
/// f(u) >= f(v) on every directed (u, v) and f(u) != f(v) on every undirected uv.
bool is_weak_coloring(const MixedGraph& g, std::span<const int> colors, int k);

}  // namespace hopfcm
