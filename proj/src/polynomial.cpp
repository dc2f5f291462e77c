#include "hopfcm/polynomial.hpp"

#include <sstream>

#include "hopfcm/errors.hpp"

namespace hopfcm {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

std::optional<int> RationalPolynomial::degree() const {
  if (coefficients_.empty()) return std::nullopt;
  return static_cast<int>(coefficients_.size()) - 1;
}

Rational RationalPolynomial::leading_coefficient() const {
  return coefficients_.empty() ? Rational(0) : coefficients_.back();
}

Rational RationalPolynomial::operator()(const Rational& x) const {
  Rational value = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) value = value * x + *it;
  return value;
}

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<Rational> c(std::max(a.coefficients_.size(), b.coefficients_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) c[i] += a.coefficients_[i];
  for (std::size_t i = 0; i < b.coefficients_.size(); ++i) c[i] += b.coefficients_[i];
  return RationalPolynomial(std::move(c));
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coefficients_.size() + b.coefficients_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) c[i + j] += a.coefficients_[i] * b.coefficients_[j];
  }
  return RationalPolynomial(std::move(c));
}

RationalPolynomial RationalPolynomial::interpolate(const std::vector<Rational>& xs,
                                                   const std::vector<Rational>& ys) {
  if (xs.size() != ys.size()) throw InvalidInput("interpolation needs as many values as nodes");
  // divided differences
  std::vector<Rational> dd = ys;
  const std::size_t n = xs.size();
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      const Rational gap = xs[i] - xs[i - level];
      if (gap == 0) throw InvalidInput("interpolation nodes must be distinct");
      dd[i] = (dd[i] - dd[i - 1]) / gap;
    }
  }
  RationalPolynomial result;
  RationalPolynomial basis({Rational(1)});
  for (std::size_t i = 0; i < n; ++i) {
    result = result + basis * RationalPolynomial({dd[i]});
    basis = basis * RationalPolynomial({-xs[i], Rational(1)});
  }
  return result;
}

RationalPolynomial RationalPolynomial::from_values(const std::vector<BigInt>& values) {
  std::vector<Rational> xs, ys;
  for (std::size_t i = 0; i < values.size(); ++i) {
    xs.emplace_back(static_cast<long long>(i));
    ys.emplace_back(values[i]);
  }
  return interpolate(xs, ys);
}

RationalPolynomial RationalPolynomial::shifted(long long shift) const {
  // Horner in the polynomial ring: p(x + c)
  RationalPolynomial result;
  const RationalPolynomial x_plus_c({Rational(shift), Rational(1)});
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    result = result * x_plus_c + RationalPolynomial({*it});
  }
  return result;
}

std::string RationalPolynomial::to_string(const std::string& var) const {
  if (coefficients_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coefficients_.size(); i-- > 0;) {
    Rational c = coefficients_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = c == 1;
    if (!unit || i == 0) {
      if (boost::multiprecision::denominator(c) == 1) out << boost::multiprecision::numerator(c);
      else out << "(" << c << ")";
      if (i > 0) out << "*";
    }
    if (i > 0) out << var;
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

}  // namespace hopfcm
