#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "hopfcm/structure.hpp"  // BigInt

namespace hopfcm {

using Rational = boost::multiprecision::cpp_rational;

/// Univariate polynomial with exact rational coefficients, ascending degree,
/// trailing zeros trimmed.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coefficients);

  /// Newton interpolation through (x_i, y_i); nodes must be distinct.
  static RationalPolynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);
  /// Interpolation through (0, values[0]), (1, values[1]), ...
  static RationalPolynomial from_values(const std::vector<BigInt>& values);

  const std::vector<Rational>& coefficients() const { return coefficients_; }
  bool is_zero() const { return coefficients_.empty(); }
  /// nullopt for the zero polynomial.
  std::optional<int> degree() const;
  Rational leading_coefficient() const;

  Rational operator()(const Rational& x) const;
  /// q(x) = p(x + shift)
  RationalPolynomial shifted(long long shift) const;

  /// "k^4/4 - k^3 + ..." in the variable `var`.
  std::string to_string(const std::string& var = "k") const;

  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;
  friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);

 private:
  std::vector<Rational> coefficients_;
};

}  // namespace hopfcm
