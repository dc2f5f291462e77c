#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hopfcm/ground_set.hpp"
#include "hopfcm/mixed_graph.hpp"  // LabelPair, IndexPair

namespace hopfcm {

/// A ground set with two strict partial orders. Relations are stored
/// transitively closed.
class DoublePoset {
 public:
  DoublePoset() = default;

  /// Takes transitive closures of both relation lists; rejects a closure
  /// that is not irreflexive.
  static DoublePoset from_relations(std::vector<std::string> elements,
                                    const std::vector<LabelPair>& order1,
                                    const std::vector<LabelPair>& order2);

  const GroundSet& carrier() const { return carrier_; }
  const GroundSet& ground() const { return carrier_; }
  int size() const { return carrier_.size(); }

  bool less1(int x, int y) const { return (above1_[static_cast<std::size_t>(x)] >> y) & 1u; }
  bool less2(int x, int y) const { return (above2_[static_cast<std::size_t>(x)] >> y) & 1u; }
  Mask above1(int x) const { return above1_[static_cast<std::size_t>(x)]; }
  Mask above2(int x) const { return above2_[static_cast<std::size_t>(x)]; }
  Mask below1(int y) const;
  /// y covers x in the first order.
  bool covers1(int x, int y) const;

  /// Pairs (x, y) of the closed relations, sorted.
  std::vector<IndexPair> relation1() const;
  std::vector<IndexPair> relation2() const;

  /// `first` is an order ideal of the first order.
  bool coproduct_support(Mask first) const { return coproduct_support_within(first, carrier_.full()); }
  /// `first` is an ideal of the first order restricted to `within`.
  bool coproduct_support_within(Mask first, Mask within) const;
  bool induced_inversion_free(Mask m) const;
  DoublePoset induced(Mask m) const;

  friend bool operator==(const DoublePoset&, const DoublePoset&) = default;

 private:
  friend DoublePoset double_poset_from_masks(GroundSet, std::vector<Mask>, std::vector<Mask>);

  GroundSet carrier_;
  std::vector<Mask> above1_;  // above1_[x] = {y : x <_1 y}
  std::vector<Mask> above2_;
};

/// Closes the given "strictly above" masks transitively and validates them.
DoublePoset double_poset_from_masks(GroundSet carrier, std::vector<Mask> above1,
                                    std::vector<Mask> above2);

/// First orders side by side; second orders side by side with every element
/// of p below every element of q.
DoublePoset dp_product(const DoublePoset& p, const DoublePoset& q);

/// (x, y) with x <_1 y and y <_2 x.
std::vector<IndexPair> inversions(const DoublePoset& p);
/// Inversions (x, y) in which y covers x in the first order.
std::vector<IndexPair> descents(const DoublePoset& p);

struct InversionToDescent {
  bool holds = true;
  std::optional<IndexPair> witness;  // an inversion with no descent between its ends
};

/// Every inversion (x, y) has a descent (w, z) with x <=_1 w and z <=_1 y.
InversionToDescent inversion_to_descent(const DoublePoset& p);

/// f weakly increases along <_1, strictly on pairs x <_1 y with y <_2 x.
bool is_p_partition(const DoublePoset& p, std::span<const int> values, int k);

}  // namespace hopfcm
