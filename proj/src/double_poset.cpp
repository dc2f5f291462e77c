#include "hopfcm/double_poset.hpp"

#include "hopfcm/errors.hpp"

namespace hopfcm {

namespace {

Mask bit(int i) { return Mask{1} << i; }

void close_transitively(std::vector<Mask>& above) {
  const int n = static_cast<int>(above.size());
  for (int k = 0; k < n; ++k) {
    for (int x = 0; x < n; ++x) {
      if (above[static_cast<std::size_t>(x)] & bit(k)) above[static_cast<std::size_t>(x)] |= above[static_cast<std::size_t>(k)];
    }
  }
}

void check_irreflexive(const GroundSet& carrier, const std::vector<Mask>& above, const char* name) {
  for (int x = 0; x < carrier.size(); ++x) {
    if (above[static_cast<std::size_t>(x)] & bit(x)) {
      throw ValidationError(ValidationErrorKind::OrderCycle,
                            std::string(name) + " has a cycle through '" + carrier.label(x) + "'");
    }
  }
}

std::vector<Mask> masks_from_pairs(const GroundSet& carrier, const std::vector<LabelPair>& pairs) {
  std::vector<Mask> above(static_cast<std::size_t>(carrier.size()), 0);
  for (const auto& [x, y] : pairs) {
    above[static_cast<std::size_t>(carrier.index_of(x))] |= bit(carrier.index_of(y));
  }
  return above;
}

std::vector<IndexPair> pairs_of(const std::vector<Mask>& above) {
  std::vector<IndexPair> out;
  const int n = static_cast<int>(above.size());
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (above[static_cast<std::size_t>(x)] & bit(y)) out.emplace_back(x, y);
    }
  }
  return out;
}

}  // namespace

DoublePoset double_poset_from_masks(GroundSet carrier, std::vector<Mask> above1,
                                    std::vector<Mask> above2) {
  const auto n = static_cast<std::size_t>(carrier.size());
  if (above1.size() != n || above2.size() != n) {
    throw ValidationError(ValidationErrorKind::Malformed, "relation size mismatch");
  }
  for (const auto* rel : {&above1, &above2}) {
    for (Mask m : *rel) {
      if (!carrier.contains(m)) {
        throw ValidationError(ValidationErrorKind::UnknownVertex, "relation leaves the carrier");
      }
    }
  }
  close_transitively(above1);
  close_transitively(above2);
  check_irreflexive(carrier, above1, "order1");
  check_irreflexive(carrier, above2, "order2");
  DoublePoset p;
  p.carrier_ = std::move(carrier);
  p.above1_ = std::move(above1);
  p.above2_ = std::move(above2);
  return p;
}

DoublePoset DoublePoset::from_relations(std::vector<std::string> elements,
                                        const std::vector<LabelPair>& order1,
                                        const std::vector<LabelPair>& order2) {
  GroundSet carrier(std::move(elements));
  auto a1 = masks_from_pairs(carrier, order1);
  auto a2 = masks_from_pairs(carrier, order2);
  return double_poset_from_masks(std::move(carrier), std::move(a1), std::move(a2));
}

Mask DoublePoset::below1(int y) const {
  Mask out = 0;
  for (int x = 0; x < size(); ++x) {
    if (less1(x, y)) out |= bit(x);
  }
  return out;
}

bool DoublePoset::covers1(int x, int y) const {
  return less1(x, y) && (above1(x) & below1(y)) == 0;
}

std::vector<IndexPair> DoublePoset::relation1() const { return pairs_of(above1_); }
std::vector<IndexPair> DoublePoset::relation2() const { return pairs_of(above2_); }

bool DoublePoset::coproduct_support_within(Mask first, Mask within) const {
  for (int y = 0; y < size(); ++y) {
    if ((first & bit(y)) && !is_subset(below1(y) & within, first)) return false;
  }
  return true;
}

bool DoublePoset::induced_inversion_free(Mask m) const {
  for (int x = 0; x < size(); ++x) {
    if (!(m & bit(x))) continue;
    for (int y = 0; y < size(); ++y) {
      if ((m & bit(y)) && less1(x, y) && less2(y, x)) return false;
    }
  }
  return true;
}

DoublePoset DoublePoset::induced(Mask m) const {
  DoublePoset p;
  p.carrier_ = carrier_.restricted(m);
  for (int x = 0; x < size(); ++x) {
    if (!(m & bit(x))) continue;
    p.above1_.push_back(compress(above1(x) & m, m));
    p.above2_.push_back(compress(above2(x) & m, m));
  }
  return p;
}

DoublePoset dp_product(const DoublePoset& p, const DoublePoset& q) {
  GroundSet carrier = disjoint_union(p.carrier(), q.carrier());
  const auto n = static_cast<std::size_t>(carrier.size());
  std::vector<Mask> a1(n, 0), a2(n, 0);
  Mask places[2] = {0, 0};
  const DoublePoset* parts[2] = {&p, &q};
  for (int side = 0; side < 2; ++side) {
    for (const auto& l : parts[side]->carrier().labels()) places[side] |= bit(carrier.index_of(l));
  }
  for (int side = 0; side < 2; ++side) {
    const DoublePoset& part = *parts[side];
    for (int x = 0; x < part.size(); ++x) {
      const auto target = static_cast<std::size_t>(carrier.index_of(part.carrier().label(x)));
      a1[target] = expand(part.above1(x), places[side]);
      a2[target] = expand(part.above2(x), places[side]);
      if (side == 0) a2[target] |= places[1];
    }
  }
  return double_poset_from_masks(std::move(carrier), std::move(a1), std::move(a2));
}

std::vector<IndexPair> inversions(const DoublePoset& p) {
  std::vector<IndexPair> out;
  for (int x = 0; x < p.size(); ++x) {
    for (int y = 0; y < p.size(); ++y) {
      if (p.less1(x, y) && p.less2(y, x)) out.emplace_back(x, y);
    }
  }
  return out;
}

std::vector<IndexPair> descents(const DoublePoset& p) {
  std::vector<IndexPair> out;
  for (const auto& [x, y] : inversions(p)) {
    if (p.covers1(x, y)) out.emplace_back(x, y);
  }
  return out;
}

InversionToDescent inversion_to_descent(const DoublePoset& p) {
  const auto desc = descents(p);
  auto leq1 = [&](int a, int b) { return a == b || p.less1(a, b); };
  for (const auto& [x, y] : inversions(p)) {
    bool found = false;
    for (const auto& [w, z] : desc) {
      if (leq1(x, w) && leq1(z, y)) {
        found = true;
        break;
      }
    }
    if (!found) return {false, IndexPair{x, y}};
  }
  return {true, std::nullopt};
}

bool is_p_partition(const DoublePoset& p, std::span<const int> values, int k) {
  if (values.size() != static_cast<std::size_t>(p.size())) {
    throw InvalidInput("p-partition is not total on the carrier");
  }
  for (int v : values) {
    if (v < 1 || v > k) throw InvalidInput("value outside [1, k]");
  }
  for (int x = 0; x < p.size(); ++x) {
    for (int y = 0; y < p.size(); ++y) {
      if (!p.less1(x, y)) continue;
      const int fx = values[static_cast<std::size_t>(x)], fy = values[static_cast<std::size_t>(y)];
      if (fx > fy) return false;
      if (p.less2(y, x) && fx == fy) return false;
    }
  }
  return true;
}

}  // namespace hopfcm
