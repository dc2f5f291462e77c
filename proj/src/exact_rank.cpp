#include "hopfcm/exact_rank.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <map>

#include "hopfcm/errors.hpp"

namespace hopfcm {

namespace {

using boost::multiprecision::cpp_int;
using BigRow = std::vector<std::pair<int, cpp_int>>;

// r <- a*r - b*pivot, where a = pivot's leading entry and b = r's leading
// entry; the shared leading column cancels.
BigRow eliminate(const BigRow& r, const BigRow& pivot) {
  const cpp_int& a = pivot.front().second;
  const cpp_int& b = r.front().second;
  BigRow out;
  auto i = r.begin() + 1;
  auto j = pivot.begin() + 1;
  while (i != r.end() || j != pivot.end()) {
    if (j == pivot.end() || (i != r.end() && i->first < j->first)) {
      out.emplace_back(i->first, a * i->second);
      ++i;
    } else if (i == r.end() || j->first < i->first) {
      out.emplace_back(j->first, -b * j->second);
      ++j;
    } else {
      cpp_int v = a * i->second - b * j->second;
      if (v != 0) out.emplace_back(i->first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

void remove_content(BigRow& r) {
  if (r.empty()) return;
  cpp_int g = 0;
  for (const auto& [c, v] : r) {
    g = boost::multiprecision::gcd(g, v);
    if (g == 1) return;
  }
  for (auto& [c, v] : r) v /= g;
}

}  // namespace

std::size_t rank_rational(const std::vector<SparseRow>& rows) {
  std::map<int, BigRow> pivots;  // leading column -> row
  for (const auto& raw : rows) {
    BigRow r;
    for (const auto& [c, v] : raw) {
      if (v != 0) r.emplace_back(c, cpp_int(v));
    }
    while (!r.empty()) {
      auto it = pivots.find(r.front().first);
      if (it == pivots.end()) {
        remove_content(r);
        pivots.emplace(r.front().first, std::move(r));
        break;
      }
      r = eliminate(r, it->second);
      remove_content(r);
    }
  }
  return pivots.size();
}

std::size_t rank_mod_prime(const std::vector<SparseRow>& rows, std::uint64_t p) {
  if (p < 2 || p >= (std::uint64_t{1} << 31)) throw InvalidInput("prime must lie in [2, 2^31)");
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) throw InvalidInput("field characteristic is not prime");
  }
  using Row = std::vector<std::pair<int, std::uint64_t>>;
  auto modpow = [p](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    b %= p;
    for (; e; e >>= 1, b = b * b % p) {
      if (e & 1) r = r * b % p;
    }
    return r;
  };
  std::map<int, Row> pivots;  // pivot rows normalized to leading 1
  for (const auto& raw : rows) {
    Row r;
    for (const auto& [c, v] : raw) {
      const long long m = v % static_cast<long long>(p);
      const std::uint64_t u = static_cast<std::uint64_t>(m < 0 ? m + static_cast<long long>(p) : m);
      if (u) r.emplace_back(c, u);
    }
    while (!r.empty()) {
      auto it = pivots.find(r.front().first);
      if (it == pivots.end()) {
        const std::uint64_t inv = modpow(r.front().second, p - 2);
        for (auto& [c, v] : r) v = v * inv % p;
        pivots.emplace(r.front().first, std::move(r));
        break;
      }
      const std::uint64_t factor = r.front().second;
      const Row& pivot = it->second;
      Row out;
      auto i = r.begin() + 1;
      auto j = pivot.begin() + 1;
      while (i != r.end() || j != pivot.end()) {
        if (j == pivot.end() || (i != r.end() && i->first < j->first)) {
          out.push_back(*i++);
        } else if (i == r.end() || j->first < i->first) {
          out.emplace_back(j->first, (p - factor * j->second % p) % p);
          ++j;
        } else {
          const std::uint64_t v = (i->second + p - factor * j->second % p) % p;
          if (v) out.emplace_back(i->first, v);
          ++i;
          ++j;
        }
      }
      r = std::move(out);
    }
  }
  return pivots.size();
}

std::size_t rank(const std::vector<SparseRow>& rows, Field field) {
  return field.rational() ? rank_rational(rows) : rank_mod_prime(rows, field.prime);
}

}  // namespace hopfcm
