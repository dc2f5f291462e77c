#include "hopfcm/mixed_graph.hpp"

#include <algorithm>

#include "hopfcm/errors.hpp"

namespace hopfcm {

namespace {

Mask bit(int i) { return Mask{1} << i; }

// Kahn's algorithm over directed edges only.
bool directed_part_is_acyclic(const std::vector<Mask>& out) {
  const int n = static_cast<int>(out.size());
  std::vector<int> indegree(out.size(), 0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (out[static_cast<std::size_t>(u)] & bit(v)) ++indegree[static_cast<std::size_t>(v)];
    }
  }
  std::vector<int> ready;
  for (int v = 0; v < n; ++v) {
    if (indegree[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
  }
  int seen = 0;
  while (!ready.empty()) {
    const int u = ready.back();
    ready.pop_back();
    ++seen;
    for (int v = 0; v < n; ++v) {
      if ((out[static_cast<std::size_t>(u)] & bit(v)) && --indegree[static_cast<std::size_t>(v)] == 0) {
        ready.push_back(v);
      }
    }
  }
  return seen == n;
}

void check_vertex(const std::vector<Mask>& adjacency, int n) {
  for (Mask m : adjacency) {
    if (!is_subset(m, full_mask(n))) {
      throw ValidationError(ValidationErrorKind::UnknownVertex, "edge endpoint outside the vertex set");
    }
  }
}

}  // namespace

MixedGraph mixed_graph_from_masks(GroundSet ground, std::vector<Mask> undirected,
                                  std::vector<Mask> out) {
  const int n = ground.size();
  if (undirected.size() != static_cast<std::size_t>(n) || out.size() != static_cast<std::size_t>(n)) {
    throw ValidationError(ValidationErrorKind::Malformed, "adjacency size mismatch");
  }
  check_vertex(undirected, n);
  check_vertex(out, n);
  for (int u = 0; u < n; ++u) {
    const auto su = static_cast<std::size_t>(u);
    if ((undirected[su] | out[su]) & bit(u)) {
      throw ValidationError(ValidationErrorKind::SelfLoop, "self-loop at '" + ground.label(u) + "'");
    }
    for (int v = 0; v < n; ++v) {
      const auto sv = static_cast<std::size_t>(v);
      if (((undirected[su] >> v) & 1u) != ((undirected[sv] >> u) & 1u)) {
        throw ValidationError(ValidationErrorKind::Malformed, "undirected adjacency not symmetric");
      }
      const int kinds = ((undirected[su] >> v) & 1u) + ((out[su] >> v) & 1u) + ((out[sv] >> u) & 1u);
      if (kinds > 1 && u < v) {
        if ((out[su] >> v) & 1u && (out[sv] >> u) & 1u && !((undirected[su] >> v) & 1u)) {
          throw ValidationError(ValidationErrorKind::DirectedCycle,
                                "directed cycle " + ground.label(u) + " <-> " + ground.label(v));
        }
        throw ValidationError(ValidationErrorKind::DuplicateEdge,
                              "more than one edge between '" + ground.label(u) + "' and '" +
                                  ground.label(v) + "'");
      }
    }
  }
  if (!directed_part_is_acyclic(out)) {
    throw ValidationError(ValidationErrorKind::DirectedCycle, "directed edges contain a cycle");
  }
  return MixedGraph(std::move(ground), std::move(undirected), std::move(out));
}

MixedGraph MixedGraph::from_edges(std::vector<std::string> vertices,
                                  const std::vector<LabelPair>& undirected,
                                  const std::vector<LabelPair>& directed) {
  GroundSet ground(std::move(vertices));
  const auto n = static_cast<std::size_t>(ground.size());
  std::vector<Mask> und(n, 0), out(n, 0);
  auto endpoints = [&](const LabelPair& e) {
    const int u = ground.index_of(e.first);
    const int v = ground.index_of(e.second);
    if (u == v) throw ValidationError(ValidationErrorKind::SelfLoop, "self-loop at '" + e.first + "'");
    return std::pair{u, v};
  };
  auto occupied = [&](int u, int v) {
    const auto su = static_cast<std::size_t>(u), sv = static_cast<std::size_t>(v);
    return ((und[su] | out[su]) & bit(v)) || (out[sv] & bit(u));
  };
  for (const auto& e : undirected) {
    const auto [u, v] = endpoints(e);
    if (occupied(u, v)) {
      throw ValidationError(ValidationErrorKind::DuplicateEdge,
                            "more than one edge between '" + e.first + "' and '" + e.second + "'");
    }
    und[static_cast<std::size_t>(u)] |= bit(v);
    und[static_cast<std::size_t>(v)] |= bit(u);
  }
  for (const auto& e : directed) {
    const auto [u, v] = endpoints(e);
    if (out[static_cast<std::size_t>(v)] & bit(u)) {
      throw ValidationError(ValidationErrorKind::DirectedCycle,
                            "directed cycle " + e.first + " <-> " + e.second);
    }
    if (occupied(u, v)) {
      throw ValidationError(ValidationErrorKind::DuplicateEdge,
                            "more than one edge between '" + e.first + "' and '" + e.second + "'");
    }
    out[static_cast<std::size_t>(u)] |= bit(v);
  }
  return mixed_graph_from_masks(std::move(ground), std::move(und), std::move(out));
}

MixedGraph MixedGraph::discrete(std::vector<std::string> vertices) {
  return from_edges(std::move(vertices), {}, {});
}

std::vector<IndexPair> MixedGraph::undirected_edges() const {
  std::vector<IndexPair> edges;
  for (int u = 0; u < size(); ++u) {
    for (int v = u + 1; v < size(); ++v) {
      if (undirected_neighbors(u) & bit(v)) edges.emplace_back(u, v);
    }
  }
  return edges;
}

std::vector<IndexPair> MixedGraph::directed_edges() const {
  std::vector<IndexPair> edges;
  for (int u = 0; u < size(); ++u) {
    for (int v = 0; v < size(); ++v) {
      if (out_neighbors(u) & bit(v)) edges.emplace_back(u, v);
    }
  }
  return edges;
}

bool MixedGraph::has_undirected_edges() const {
  return std::any_of(undirected_.begin(), undirected_.end(), [](Mask m) { return m != 0; });
}

bool MixedGraph::has_edges() const {
  return has_undirected_edges() ||
         std::any_of(out_.begin(), out_.end(), [](Mask m) { return m != 0; });
}

bool MixedGraph::coproduct_support_within(Mask first, Mask within) const {
  const Mask rest = within & ~first;
  for (int u = 0; u < size(); ++u) {
    if ((first & bit(u)) && (out_neighbors(u) & rest)) return false;
  }
  return true;
}

bool MixedGraph::induced_is_edgeless(Mask m) const {
  for (int u = 0; u < size(); ++u) {
    if ((m & bit(u)) && ((undirected_neighbors(u) | out_neighbors(u)) & m)) return false;
  }
  return true;
}

bool MixedGraph::induced_has_no_undirected(Mask m) const {
  for (int u = 0; u < size(); ++u) {
    if ((m & bit(u)) && (undirected_neighbors(u) & m)) return false;
  }
  return true;
}

MixedGraph MixedGraph::induced(Mask m) const {
  std::vector<Mask> und, out;
  for (int u = 0; u < size(); ++u) {
    if (!(m & bit(u))) continue;
    und.push_back(compress(undirected_neighbors(u) & m, m));
    out.push_back(compress(out_neighbors(u) & m, m));
  }
  return MixedGraph(ground_.restricted(m), std::move(und), std::move(out));
}

MixedGraph disjoint_union(const MixedGraph& g, const MixedGraph& h) {
  GroundSet ground = disjoint_union(g.ground(), h.ground());
  const auto n = static_cast<std::size_t>(ground.size());
  std::vector<Mask> und(n, 0), out(n, 0);
  for (const MixedGraph* part : {&g, &h}) {
    Mask place = 0;
    for (const auto& l : part->ground().labels()) place |= bit(ground.index_of(l));
    for (int u = 0; u < part->size(); ++u) {
      const auto target = static_cast<std::size_t>(ground.index_of(part->ground().label(u)));
      und[target] = expand(part->undirected_neighbors(u), place);
      out[target] = expand(part->out_neighbors(u), place);
    }
  }
  return MixedGraph(std::move(ground), std::move(und), std::move(out));
}

InducedPoset::InducedPoset(const MixedGraph& g)
    : carrier_(g.ground()),
      down_(static_cast<std::size_t>(g.size())),
      up_(static_cast<std::size_t>(g.size())) {
  const int n = g.size();
  for (int v = 0; v < n; ++v) down_[static_cast<std::size_t>(v)] = bit(v) | g.out_neighbors(v);
  // transitive closure; n is tiny
  for (int k = 0; k < n; ++k) {
    for (int v = 0; v < n; ++v) {
      if (down_[static_cast<std::size_t>(v)] & bit(k)) down_[static_cast<std::size_t>(v)] |= down_[static_cast<std::size_t>(k)];
    }
  }
  for (int m = 0; m < n; ++m) {
    for (int v = 0; v < n; ++v) {
      if (down_[static_cast<std::size_t>(v)] & bit(m)) up_[static_cast<std::size_t>(m)] |= bit(v);
    }
  }
}

Mask InducedPoset::down_closure(Mask m) const {
  Mask out = 0;
  for (int v = 0; v < carrier_.size(); ++v) {
    if (m & bit(v)) out |= down_[static_cast<std::size_t>(v)];
  }
  return out;
}

Mask InducedPoset::up_closure(Mask m) const {
  Mask out = 0;
  for (int v = 0; v < carrier_.size(); ++v) {
    if (m & bit(v)) out |= up_[static_cast<std::size_t>(v)];
  }
  return out;
}

Mask InducedPoset::convex_hull(Mask m) const { return down_closure(m) & up_closure(m); }

namespace {

Mask endpoints(const IndexPair& e) { return bit(e.first) | bit(e.second); }

// e and f cross when C ∩ I holds exactly one endpoint of f, where C is the
// convex hull of all four endpoints and I the ideal generated by e.
bool crosses(const InducedPoset& p, const IndexPair& e, const IndexPair& f) {
  const Mask hull = p.convex_hull(endpoints(e) | endpoints(f));
  const Mask ideal = p.down_closure(endpoints(e));
  return popcount(hull & ideal & endpoints(f)) == 1;
}

}  // namespace

std::vector<CrossingPair> crossing_pairs(const MixedGraph& g) {
  const InducedPoset poset(g);
  const auto edges = g.undirected_edges();
  std::vector<CrossingPair> out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      // edges sharing an endpoint never cross; otherwise every undirected path would
      if (endpoints(edges[i]) & endpoints(edges[j])) continue;
      CrossingPair pair{edges[i], edges[j], crosses(poset, edges[i], edges[j]),
                        crosses(poset, edges[j], edges[i])};
      if (pair.e_crosses_f || pair.f_crosses_e) out.push_back(pair);
    }
  }
  return out;
}

bool is_noncrossing(const MixedGraph& g) { return crossing_pairs(g).empty(); }

namespace {

void check_coloring(const MixedGraph& g, std::span<const int> colors, int k) {
  if (colors.size() != static_cast<std::size_t>(g.size())) {
    throw InvalidInput("coloring is not total on the vertex set");
  }
  for (int c : colors) {
    if (c < 1 || c > k) throw InvalidInput("color outside [1, k]");
  }
}

template <typename DirectedRule>
bool respects(const MixedGraph& g, std::span<const int> colors, DirectedRule rule) {
  for (const auto& [u, v] : g.directed_edges()) {
    if (!rule(colors[static_cast<std::size_t>(u)], colors[static_cast<std::size_t>(v)])) return false;
  }
  for (const auto& [u, v] : g.undirected_edges()) {
    if (colors[static_cast<std::size_t>(u)] == colors[static_cast<std::size_t>(v)]) return false;
  }
  return true;
}

}  // namespace

bool is_strong_coloring(const MixedGraph& g, std::span<const int> colors, int k) {
  check_coloring(g, colors, k);
  return respects(g, colors, [](int fu, int fv) { return fu < fv; });
}

bool is_weak_coloring(const MixedGraph& g, std::span<const int> colors, int k) {
  check_coloring(g, colors, k);
  return respects(g, colors, [](int fu, int fv) { return fu >= fv; });
}

}  // namespace hopfcm
