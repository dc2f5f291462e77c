#include "hopfcm/hopf_complexes.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace hopfcm {

namespace {

bool by_size_then_mask(Mask a, Mask b) {
  if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
  return a < b;
}

std::vector<std::string> subset_labels(const std::vector<Mask>& vertices,
                                       const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (Mask m : vertices) {
    std::string label;
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (!(m & (Mask{1} << i))) continue;
      if (!label.empty()) label += '|';
      label += names[i];
    }
    out.push_back(std::move(label));
  }
  return out;
}

// Visits every strict chain of `vertices` (sorted by size) as index lists,
// including the empty chain.
void for_each_chain(const std::vector<Mask>& vertices, const Limits& limits,
                    const std::function<void(const Face&)>& visit) {
  Face chain;
  std::size_t seen = 0;
  std::function<void(int)> grow = [&](int from) {
    if (++seen > limits.max_faces) throw ResourceLimitExceeded("order complex exceeds the face limit");
    visit(chain);
    for (int v = from; v < static_cast<int>(vertices.size()); ++v) {
      const Mask top = chain.empty() ? 0 : vertices[static_cast<std::size_t>(chain.back())];
      const Mask next = vertices[static_cast<std::size_t>(v)];
      if (next == top || !is_subset(top, next)) continue;
      chain.push_back(v);
      grow(v + 1);
      chain.pop_back();
    }
  };
  grow(0);
}

std::vector<Mask> sigma_vertices(const Structure& h, const Limits& limits) {
  if (h.size() > limits.max_vertices) {
    throw ResourceLimitExceeded("ground set of size " + std::to_string(h.size()) + " exceeds the vertex limit " +
                                std::to_string(limits.max_vertices));
  }
  std::vector<Mask> vertices;
  const Mask full = h.ground().full();
  for (Mask s = 1; s < full; ++s) {
    if (h.delta_defined(s)) vertices.push_back(s);
  }
  std::sort(vertices.begin(), vertices.end(), by_size_then_mask);
  return vertices;
}

// Chains whose consecutive steps (∅ -> S_1 -> ... -> S_k -> N) satisfy `bad`
// at least once.
template <typename Bad>
SimplicialComplex chain_subcomplex(const std::vector<Mask>& vertices, std::vector<std::string> labels,
                                   Mask full, const Limits& limits, Bad bad) {
  std::vector<Face> kept;
  for_each_chain(vertices, limits, [&](const Face& chain) {
    Mask below = 0;
    for (int v : chain) {
      const Mask s = vertices[static_cast<std::size_t>(v)];
      if (bad(below, s)) {
        kept.push_back(chain);
        return;
      }
      below = s;
    }
    if (bad(below, full)) kept.push_back(chain);
  });
  return SimplicialComplex::from_faces(std::move(labels), kept);
}

SimplicialComplex order_complex(const std::vector<Mask>& vertices, std::vector<std::string> labels,
                                const Limits& limits) {
  std::vector<Face> chains;
  for_each_chain(vertices, limits, [&](const Face& chain) { chains.push_back(chain); });
  return SimplicialComplex::from_faces(std::move(labels), chains);
}

}  // namespace

SimplicialComplex sigma(const Structure& h, const Limits& limits) {
  const auto vertices = sigma_vertices(h, limits);
  return order_complex(vertices, subset_labels(vertices, h.ground().labels()), limits);
}

SimplicialComplex gamma(const Structure& h, SubmonoidId s, const Limits& limits) {
  const auto vertices = sigma_vertices(h, limits);
  std::unordered_map<std::uint64_t, bool> memo;
  auto bad = [&](Mask lower, Mask upper) {
    const std::uint64_t key = (std::uint64_t{lower} << 32) | upper;
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(key, !h.minor_in_submonoid(lower, upper, s)).first;
    return it->second;
  };
  if (!valid_for(s, h.family())) throw InvalidInput("submonoid does not apply to this family");
  return chain_subcomplex(vertices, subset_labels(vertices, h.ground().labels()), h.ground().full(),
                          limits, bad);
}

RelativePair sigma_gamma_pair(const Structure& h, SubmonoidId s, const Limits& limits) {
  return RelativePair(sigma(h, limits), gamma(h, s, limits));
}

IntervalFilter::IntervalFilter(int n, std::vector<Mask> members, std::set<Interval> filter,
                               std::vector<std::string> labels)
    : n_(n), members_(std::move(members)), filter_(std::move(filter)), labels_(std::move(labels)) {
  if (n_ < 0 || n_ > kMaxGroundSize) throw InvalidInput("interval filter size out of range");
  if (labels_.empty()) {
    for (int i = 1; i <= n_; ++i) labels_.push_back(std::to_string(i));
  }
  if (static_cast<int>(labels_.size()) != n_) throw InvalidInput("label count differs from n");
  const Mask full = full_mask(n_);
  std::sort(members_.begin(), members_.end(), by_size_then_mask);
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  auto member = [&](Mask m) { return std::binary_search(members_.begin(), members_.end(), m, by_size_then_mask); };
  if (!member(0) || !member(full)) throw InvalidInput("M must contain the empty set and [n]");
  for (Mask m : members_) {
    if (!is_subset(m, full)) throw InvalidInput("member of M is not a subset of [n]");
  }
  for (const auto& [s, t] : filter_) {
    if (!member(s) || !member(t) || !is_subset(s, t)) throw InvalidInput("F holds a non-interval of M");
    for (Mask s2 : members_) {
      if (!is_subset(s2, s)) continue;
      for (Mask t2 : members_) {
        if (is_subset(t, t2) && !filter_.count({s2, t2})) {
          throw InvalidInput("F is not up-closed in Int(M)");
        }
      }
    }
  }
}

IntervalFilter IntervalFilter::from_structure(const Structure& h, SubmonoidId s) {
  std::vector<Mask> members;
  const Mask full = h.ground().full();
  for (Mask m = 0; m <= full; ++m) {
    if (h.delta_defined(m)) members.push_back(m);
    if (m == full) break;
  }
  std::set<Interval> filter;
  for (Mask lower : members) {
    for (Mask upper : members) {
      if (is_subset(lower, upper) && !h.minor_in_submonoid(lower, upper, s)) {
        filter.insert({lower, upper});
      }
    }
  }
  return IntervalFilter(h.size(), std::move(members), std::move(filter), h.ground().labels());
}

IntervalFilter IntervalFilter::generated(int n, std::vector<Mask> members,
                                         const std::vector<Interval>& generators,
                                         std::vector<std::string> labels) {
  std::set<Interval> filter;
  for (const auto& [s, t] : generators) {
    for (Mask s2 : members) {
      if (!is_subset(s2, s)) continue;
      for (Mask t2 : members) {
        if (is_subset(t, t2)) filter.insert({s2, t2});
      }
    }
  }
  return IntervalFilter(n, std::move(members), std::move(filter), std::move(labels));
}

std::vector<Interval> IntervalFilter::minimal_intervals() const {
  std::vector<Interval> out;
  for (const auto& iv : filter_) {
    bool minimal = true;
    for (const auto& other : filter_) {
      if (other != iv && is_subset(iv.first, other.first) && is_subset(other.second, iv.second)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(iv);
  }
  return out;
}

RelativePair interval_gamma(const IntervalFilter& ifm, const Limits& limits) {
  const Mask full = full_mask(ifm.n());
  std::vector<Mask> vertices;
  for (Mask m : ifm.members()) {
    if (m != 0 && m != full) vertices.push_back(m);
  }
  auto labels = subset_labels(vertices, ifm.labels());
  SimplicialComplex total = order_complex(vertices, labels, limits);
  SimplicialComplex sub = chain_subcomplex(vertices, std::move(labels), full, limits,
                                           [&](Mask s, Mask t) { return ifm.contains({s, t}); });
  return RelativePair(std::move(total), std::move(sub));
}

}  // namespace hopfcm
