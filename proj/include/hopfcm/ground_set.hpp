#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hopfcm {

/// Subset of a ground set, bit i standing for the i-th element.
using Mask = std::uint32_t;

inline constexpr int kMaxGroundSize = 24;

inline int popcount(Mask m) { return std::popcount(m); }
inline Mask full_mask(int n) { return n == 0 ? 0u : (~Mask{0} >> (32 - n)); }
inline bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

/// Re-index the bits of `value` that lie in `within` to a dense mask over the
/// elements of `within` (bit-extract).
Mask compress(Mask value, Mask within);
/// Inverse of compress.
Mask expand(Mask value, Mask within);

/// Finite set of opaque string labels, kept in lexicographic order.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  bool empty() const { return labels_.empty(); }
  Mask full() const { return full_mask(size()); }
  bool contains(Mask m) const { return is_subset(m, full()); }

  const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> find(std::string_view label) const;
  int index_of(std::string_view label) const;  // throws ValidationError(UnknownVertex)

  Mask mask_of(std::span<const std::string> labels) const;
  std::vector<std::string> labels_of(Mask m) const;
  GroundSet restricted(Mask m) const;

  /// "a|b|d"; the empty subset renders as "".
  std::string render(Mask m) const;

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  std::vector<std::string> labels_;
};

/// Union of two ground sets; throws InvalidInput when they overlap.
GroundSet disjoint_union(const GroundSet& a, const GroundSet& b);

}  // namespace hopfcm
