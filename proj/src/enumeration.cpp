#include "hopfcm/enumeration.hpp"

#include <algorithm>
#include <numeric>

#include "hopfcm/serialize.hpp"

namespace hopfcm {

namespace {

Mask bit(int i) { return Mask{1} << i; }

std::vector<std::string> letters(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.emplace_back(1, static_cast<char>('a' + i));
  return out;
}

// Adjacency code of a structure under a relabeling. position[new] = old.
using Code = std::vector<std::uint8_t>;

struct Encoder {
  const Structure& h;

  std::uint8_t cell(const std::vector<int>& position, int i, int j) const {
    const int u = position[static_cast<std::size_t>(i)], v = position[static_cast<std::size_t>(j)];
    if (const MixedGraph* g = h.mixed_graph()) {
      if (g->undirected_neighbors(u) & bit(v)) return 1;
      if (g->out_neighbors(u) & bit(v)) return 2;
      if (g->out_neighbors(v) & bit(u)) return 3;
      return 0;
    }
    const DoublePoset& p = *h.double_poset();
    return static_cast<std::uint8_t>((p.less1(u, v) ? 1 : 0) | (p.less1(v, u) ? 2 : 0) |
                                     (p.less2(u, v) ? 4 : 0) | (p.less2(v, u) ? 8 : 0));
  }

  Code encode(const std::vector<int>& position) const {
    const int n = h.size();
    Code code;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) code.push_back(cell(position, i, j));
    }
    return code;
  }

  // -1, 0, 1 as encode(position) is below, equal to, above `best`.
  int compare(const std::vector<int>& position, const Code& best) const {
    const int n = h.size();
    std::size_t at = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j, ++at) {
        const std::uint8_t c = cell(position, i, j);
        if (c != best[at]) return c < best[at] ? -1 : 1;
      }
    }
    return 0;
  }
};

Structure relabeled(const Structure& h, const std::vector<int>& position) {
  const int n = h.size();
  GroundSet ground(letters(n));
  std::vector<int> to_new(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) to_new[static_cast<std::size_t>(position[static_cast<std::size_t>(i)])] = i;
  auto move_mask = [&](Mask m) {
    Mask out = 0;
    for (int v = 0; v < n; ++v) {
      if (m & bit(v)) out |= bit(to_new[static_cast<std::size_t>(v)]);
    }
    return out;
  };
  std::vector<Mask> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
  if (const MixedGraph* g = h.mixed_graph()) {
    for (int i = 0; i < n; ++i) {
      const int old = position[static_cast<std::size_t>(i)];
      a[static_cast<std::size_t>(i)] = move_mask(g->undirected_neighbors(old));
      b[static_cast<std::size_t>(i)] = move_mask(g->out_neighbors(old));
    }
    return mixed_graph_from_masks(std::move(ground), std::move(a), std::move(b));
  }
  const DoublePoset& p = *h.double_poset();
  for (int i = 0; i < n; ++i) {
    const int old = position[static_cast<std::size_t>(i)];
    a[static_cast<std::size_t>(i)] = move_mask(p.above1(old));
    b[static_cast<std::size_t>(i)] = move_mask(p.above2(old));
  }
  return double_poset_from_masks(std::move(ground), std::move(a), std::move(b));
}

// True when no relabeling gives a smaller code than the identity.
bool is_canonical(const Structure& h) {
  const Encoder enc{h};
  std::vector<int> position(static_cast<std::size_t>(h.size()));
  std::iota(position.begin(), position.end(), 0);
  const Code identity = enc.encode(position);
  while (std::next_permutation(position.begin(), position.end())) {
    if (enc.compare(position, identity) < 0) return false;
  }
  return true;
}

bool acyclic(const std::vector<Mask>& out) {
  // repeatedly strip sinks
  const int n = static_cast<int>(out.size());
  Mask alive = full_mask(n);
  bool changed = true;
  while (alive && changed) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      if ((alive & bit(v)) && (out[static_cast<std::size_t>(v)] & alive) == 0) {
        alive &= ~bit(v);
        changed = true;
      }
    }
  }
  return alive == 0;
}

// Strict partial orders on n labeled elements as "strictly above" masks.
std::vector<std::vector<Mask>> strict_orders(int n) {
  std::vector<std::pair<int, int>> cells;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x != y) cells.emplace_back(x, y);
    }
  }
  std::vector<std::vector<Mask>> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << cells.size()); ++m) {
    std::vector<Mask> above(static_cast<std::size_t>(n), 0);
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (m & (std::uint64_t{1} << c)) above[static_cast<std::size_t>(cells[c].first)] |= bit(cells[c].second);
    }
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      if (above[static_cast<std::size_t>(x)] & bit(x)) ok = false;
      for (int y = 0; y < n && ok; ++y) {
        if (!(above[static_cast<std::size_t>(x)] & bit(y))) continue;
        if (!is_subset(above[static_cast<std::size_t>(y)], above[static_cast<std::size_t>(x)])) ok = false;  // transitive
        if (above[static_cast<std::size_t>(y)] & bit(x)) ok = false;                                         // antisymmetric
      }
    }
    if (ok) out.push_back(std::move(above));
  }
  return out;
}

}  // namespace

int enumeration_cap(Family family) { return family == Family::MixedGraph ? 5 : 4; }

Structure canonical_structure(const Structure& h) {
  const Encoder enc{h};
  std::vector<int> position(static_cast<std::size_t>(h.size()));
  std::iota(position.begin(), position.end(), 0);
  std::vector<int> best_position = position;
  Code best = enc.encode(position);
  while (std::next_permutation(position.begin(), position.end())) {
    if (enc.compare(position, best) < 0) {
      best = enc.encode(position);
      best_position = position;
    }
  }
  return relabeled(h, best_position);
}

std::string canonical_form(const Structure& h) { return serialize(canonical_structure(h)); }

std::vector<Structure> enumerate_mixed_graphs(int n) {
  if (n < 0) throw InvalidInput("negative size");
  if (n > enumeration_cap(Family::MixedGraph)) {
    throw ResourceLimitExceeded("mixed-graph enumeration is capped at " +
                                std::to_string(enumeration_cap(Family::MixedGraph)) + " vertices");
  }
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<Structure> out;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < pairs.size(); ++i) total *= 4;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<Mask> und(static_cast<std::size_t>(n), 0), dir(static_cast<std::size_t>(n), 0);
    std::uint64_t rest = code;
    for (const auto& [i, j] : pairs) {
      switch (rest % 4) {
        case 1: und[static_cast<std::size_t>(i)] |= bit(j); und[static_cast<std::size_t>(j)] |= bit(i); break;
        case 2: dir[static_cast<std::size_t>(i)] |= bit(j); break;
        case 3: dir[static_cast<std::size_t>(j)] |= bit(i); break;
        default: break;
      }
      rest /= 4;
    }
    if (!acyclic(dir)) continue;
    Structure h = mixed_graph_from_masks(GroundSet(letters(n)), std::move(und), std::move(dir));
    if (is_canonical(h)) out.push_back(std::move(h));
  }
  return out;
}

std::vector<Structure> enumerate_double_posets(int n) {
  if (n < 0) throw InvalidInput("negative size");
  if (n > enumeration_cap(Family::DoublePoset)) {
    throw ResourceLimitExceeded("double-poset enumeration is capped at " +
                                std::to_string(enumeration_cap(Family::DoublePoset)) + " elements");
  }
  const auto orders = strict_orders(n);
  std::vector<Structure> out;
  for (const auto& first : orders) {
    for (const auto& second : orders) {
      Structure h = double_poset_from_masks(GroundSet(letters(n)), first, second);
      if (is_canonical(h)) out.push_back(std::move(h));
    }
  }
  return out;
}

std::vector<Structure> enumerate_structures(Family family, int n) {
  return family == Family::MixedGraph ? enumerate_mixed_graphs(n) : enumerate_double_posets(n);
}

StructureAnalysis analyze(const Structure& h, SubmonoidId s, const Limits& limits) {
  StructureAnalysis a;
  a.canonical = canonical_form(h);
  a.h_vector = h_vector_shifted(h, s, limits);
  a.h_positive = is_h_positive(a.h_vector);
  a.f_positive = is_f_positive(to_fundamental(qsym_monomial(h, s)));
  a.theorem1 = theorem1_combinatorial(h, s, limits).verdict;
  const RelativePair pair = sigma_gamma_pair(h, s, limits);
  a.relatively_cm = is_relatively_cm(pair).verdict;
  if (h.family() == Family::MixedGraph && s == SubmonoidId::Directed) {
    a.characterization = is_noncrossing(*h.mixed_graph());
  } else if (h.family() == Family::DoublePoset && s == SubmonoidId::InversionFree) {
    a.characterization = inversion_to_descent(*h.double_poset()).holds;
  }
  const HomologyProfile sig = reduced_betti(pair.total());
  a.sigma_vanishes_below_top = !sig.first_nonzero_below(sig.top_dimension()).has_value();
  a.sigma_acyclic = !sig.first_nonzero_below(sig.top_dimension() + 1).has_value();
  return a;
}

ScanSummary cm_hopf_scan(Family family, SubmonoidId s, int n, const Limits& limits) {
  if (!valid_for(s, family)) throw InvalidInput("submonoid does not apply to this family");
  ScanSummary summary;
  summary.family = family;
  summary.submonoid = s;
  summary.max_size = n;
  for (int size = 0; size <= n; ++size) {
    for (const Structure& h : enumerate_structures(family, size)) {
      const StructureAnalysis a = analyze(h, s, limits);
      ++summary.structures;
      if (!a.sigma_vanishes_below_top) ++summary.sigma_violations;
      if (!a.sigma_acyclic) ++summary.sigma_literal_violations;
      ++summary.agreement[a.theorem1 ? 1 : 0][a.relatively_cm ? 1 : 0];
      if (a.theorem1 != a.relatively_cm) summary.disagreements.push_back(a.canonical);
    }
  }
  return summary;
}

}  // namespace hopfcm
