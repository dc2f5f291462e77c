#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace hopfcm {

/// Sparse integer row: (column, value) pairs with strictly increasing columns.
using SparseRow = std::vector<std::pair<int, long long>>;

/// Coefficient field for ranks: the rationals (prime == 0) or GF(prime).
struct Field {
  std::uint64_t prime = 0;
  bool rational() const { return prime == 0; }
  friend bool operator==(const Field&, const Field&) = default;
};

/// Rank over the rationals by fraction-free row reduction with content
/// removal; arbitrary-precision throughout.
std::size_t rank_rational(const std::vector<SparseRow>& rows);
/// Rank over GF(p); p must be prime and below 2^31.
std::size_t rank_mod_prime(const std::vector<SparseRow>& rows, std::uint64_t p);
std::size_t rank(const std::vector<SparseRow>& rows, Field field);

}  // namespace hopfcm
