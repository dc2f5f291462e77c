#pragma once

// Fixtures, random generators and brute-force oracles shared by the test
// binaries. The oracles work from raw edge and relation lists and do not call
// into the library's own counting, support or homology code.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hopfcm/double_poset.hpp"
#include "hopfcm/mixed_graph.hpp"
#include "hopfcm/simplicial_complex.hpp"
#include "hopfcm/structure.hpp"

namespace fixtures {

inline hopfcm::MixedGraph reference_graph() {
  return hopfcm::MixedGraph::from_edges({"a", "b", "c", "d"}, {{"a", "c"}, {"b", "d"}},
                                        {{"c", "b"}, {"d", "a"}});
}

// first order the chain a < b < c, second order the single relation c < a
inline hopfcm::DoublePoset reference_poset() {
  return hopfcm::DoublePoset::from_relations({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}, {{"c", "a"}});
}

inline hopfcm::MixedGraph k2() { return hopfcm::MixedGraph::from_edges({"x", "y"}, {{"x", "y"}}, {}); }

inline hopfcm::Mask mask(const hopfcm::Structure& h, std::vector<std::string> labels) {
  return h.ground().mask_of(labels);
}

}  // namespace fixtures

namespace gen {

using Rng = std::mt19937_64;

inline std::vector<std::string> labels(int n, const std::string& prefix = "v") {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

// Directed edges follow a random linear order, so the result is always acyclic.
inline hopfcm::MixedGraph mixed_graph(Rng& rng, int n, const std::string& prefix = "v") {
  auto names = labels(n, prefix);
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::uniform_int_distribution<int> kind(0, 3);
  std::vector<hopfcm::LabelPair> und, dir;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const auto& u = names[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
      const auto& v = names[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])];
      switch (kind(rng)) {
        case 1: und.emplace_back(u, v); break;
        case 2: dir.emplace_back(u, v); break;
        default: break;
      }
    }
  }
  return hopfcm::MixedGraph::from_edges(names, und, dir);
}

inline std::vector<hopfcm::LabelPair> random_order(Rng& rng, const std::vector<std::string>& names) {
  std::vector<std::size_t> order(names.size());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution keep(0.35);
  std::vector<hopfcm::LabelPair> out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      if (keep(rng)) out.emplace_back(names[order[i]], names[order[j]]);
    }
  }
  return out;
}

inline hopfcm::DoublePoset double_poset(Rng& rng, int n, const std::string& prefix = "v") {
  auto names = labels(n, prefix);
  auto first = random_order(rng, names);
  auto second = random_order(rng, names);
  return hopfcm::DoublePoset::from_relations(names, first, second);
}

inline hopfcm::Structure structure(Rng& rng, hopfcm::Family family, int n, const std::string& prefix = "v") {
  if (family == hopfcm::Family::MixedGraph) return mixed_graph(rng, n, prefix);
  return double_poset(rng, n, prefix);
}

inline hopfcm::Mask subset(Rng& rng, hopfcm::Mask within) {
  std::uniform_int_distribution<std::uint32_t> bits;
  return bits(rng) & within;
}

}  // namespace gen

namespace oracle {

// Plain data extracted once through the public accessors.
struct RawGraph {
  int n = 0;
  std::vector<std::pair<int, int>> undirected, directed;
};

inline RawGraph raw(const hopfcm::MixedGraph& g) {
  return {g.size(), g.undirected_edges(), g.directed_edges()};
}

struct RawPoset {
  int n = 0;
  std::vector<std::pair<int, int>> lt1, lt2;  // transitively closed
};

inline RawPoset raw(const hopfcm::DoublePoset& p) { return {p.size(), p.relation1(), p.relation2()}; }

inline bool in(std::uint32_t s, int v) { return (s >> v) & 1u; }

// No directed edge from s to its complement.
inline bool graph_support(const RawGraph& g, std::uint32_t s) {
  for (auto [u, v] : g.directed) {
    if (in(s, u) && !in(s, v)) return false;
  }
  return true;
}

// s is closed downward in the first order.
inline bool poset_support(const RawPoset& p, std::uint32_t s) {
  for (auto [x, y] : p.lt1) {
    if (in(s, y) && !in(s, x)) return false;
  }
  return true;
}

template <typename Visit>
void for_each_map(int n, int k, Visit visit) {
  std::vector<int> f(static_cast<std::size_t>(n), 1);
  if (n == 0) {
    visit(f);
    return;
  }
  if (k <= 0) return;
  while (true) {
    visit(f);
    int i = 0;
    while (i < n && f[static_cast<std::size_t>(i)] == k) f[static_cast<std::size_t>(i++)] = 1;
    if (i == n) return;
    ++f[static_cast<std::size_t>(i)];
  }
}

inline bool strong(const RawGraph& g, const std::vector<int>& f) {
  for (auto [u, v] : g.directed) {
    if (!(f[static_cast<std::size_t>(u)] < f[static_cast<std::size_t>(v)])) return false;
  }
  for (auto [u, v] : g.undirected) {
    if (f[static_cast<std::size_t>(u)] == f[static_cast<std::size_t>(v)]) return false;
  }
  return true;
}

inline bool weak(const RawGraph& g, const std::vector<int>& f) {
  for (auto [u, v] : g.directed) {
    if (!(f[static_cast<std::size_t>(u)] >= f[static_cast<std::size_t>(v)])) return false;
  }
  for (auto [u, v] : g.undirected) {
    if (f[static_cast<std::size_t>(u)] == f[static_cast<std::size_t>(v)]) return false;
  }
  return true;
}

// Weakly increasing along the first order, strictly where the second order disagrees.
inline bool p_partition(const RawPoset& p, const std::vector<int>& f) {
  std::set<std::pair<int, int>> second(p.lt2.begin(), p.lt2.end());
  for (auto [x, y] : p.lt1) {
    const int fx = f[static_cast<std::size_t>(x)], fy = f[static_cast<std::size_t>(y)];
    if (fx > fy) return false;
    if (second.count({y, x}) && fx == fy) return false;
  }
  return true;
}

inline long long count_strong(const RawGraph& g, int k) {
  long long c = 0;
  for_each_map(g.n, k, [&](const std::vector<int>& f) { c += strong(g, f); });
  return c;
}

inline long long count_weak(const RawGraph& g, int k) {
  long long c = 0;
  for_each_map(g.n, k, [&](const std::vector<int>& f) { c += weak(g, f); });
  return c;
}

inline long long count_p_partitions(const RawPoset& p, int k) {
  long long c = 0;
  for_each_map(p.n, k, [&](const std::vector<int>& f) { c += p_partition(p, f); });
  return c;
}

// Colorings counted in the structure's natural characteristic sense:
// strong (edgeless), weak (directed), p-partitions (inversion-free). The
// full submonoid counts every map whose levels respect the coproduct.
inline long long count_colorings(const hopfcm::Structure& h, hopfcm::SubmonoidId s, int k) {
  using hopfcm::SubmonoidId;
  if (const auto* g = h.mixed_graph()) {
    if (s == SubmonoidId::Edgeless) return count_strong(raw(*g), k);
    if (s == SubmonoidId::Directed) return count_weak(raw(*g), k);
    const RawGraph r = raw(*g);
    long long c = 0;
    for_each_map(r.n, k, [&](const std::vector<int>& f) {
      bool ok = true;
      for (auto [u, v] : r.directed) ok = ok && f[static_cast<std::size_t>(u)] >= f[static_cast<std::size_t>(v)];
      c += ok;
    });
    return c;
  }
  const RawPoset p = raw(*h.double_poset());
  if (s == SubmonoidId::InversionFree) return count_p_partitions(p, k);
  long long c = 0;
  for_each_map(p.n, k, [&](const std::vector<int>& f) {
    bool ok = true;
    for (auto [x, y] : p.lt1) ok = ok && f[static_cast<std::size_t>(x)] <= f[static_cast<std::size_t>(y)];
    c += ok;
  });
  return c;
}

// Dense rank over GF(p) by plain Gaussian elimination.
inline std::size_t dense_rank(std::vector<std::vector<long long>> m, long long p = 1'000'000'007LL) {
  auto pow_mod = [p](long long b, long long e) {
    long long r = 1;
    b %= p;
    while (e) {
      if (e & 1) r = static_cast<long long>((__int128)r * b % p);
      b = static_cast<long long>((__int128)b * b % p);
      e >>= 1;
    }
    return r;
  };
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && (m[pivot][c] % p + p) % p == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    const long long inv = pow_mod((m[rank][c] % p + p) % p, p - 2);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank) continue;
      const long long factor = static_cast<long long>((__int128)((m[r][c] % p + p) % p) * inv % p);
      if (!factor) continue;
      for (std::size_t j = c; j < cols; ++j) {
        m[r][j] = static_cast<long long>(((m[r][j] - (__int128)factor * m[rank][j]) % p + p) % p);
      }
    }
    ++rank;
  }
  return rank;
}

// Reduced Betti numbers of faces(total) minus faces(sub), dimensions -1 .. top,
// from dense boundary matrices.
inline std::vector<std::size_t> betti(const std::vector<std::vector<int>>& total,
                                      const std::vector<std::vector<int>>& sub = {}) {
  std::set<std::vector<int>> removed(sub.begin(), sub.end());
  std::map<int, std::vector<std::vector<int>>> by_dim;
  int top = -2;
  for (const auto& f : total) {
    if (removed.count(f)) continue;
    const int d = static_cast<int>(f.size()) - 1;
    by_dim[d].push_back(f);
    top = std::max(top, d);
  }
  if (top < -1) return {};
  auto boundary_rank = [&](int d) -> std::size_t {  // rank of the map C_d -> C_{d-1}
    if (!by_dim.count(d) || !by_dim.count(d - 1)) return 0;
    const auto& rows = by_dim[d];
    const auto& cols = by_dim[d - 1];
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < cols.size(); ++i) index[cols[i]] = i;
    std::vector<std::vector<long long>> m(rows.size(), std::vector<long long>(cols.size(), 0));
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t i = 0; i < rows[r].size(); ++i) {
        auto face = rows[r];
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        auto it = index.find(face);
        if (it != index.end()) m[r][it->second] = (i % 2 == 0) ? 1 : -1;
      }
    }
    return dense_rank(m);
  };
  std::vector<std::size_t> out;
  for (int d = -1; d <= top; ++d) {
    const std::size_t faces = by_dim.count(d) ? by_dim[d].size() : 0;
    out.push_back(faces - boundary_rank(d) - boundary_rank(d + 1));
  }
  return out;
}

inline std::vector<std::vector<int>> faces_of(const hopfcm::SimplicialComplex& c) {
  return {c.faces().begin(), c.faces().end()};
}

}  // namespace oracle
