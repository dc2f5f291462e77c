#include "hopfcm/invariants.hpp"

#include <functional>
#include <sstream>

namespace hopfcm {

std::string HVector::display() const {
  std::size_t shown = entries.size();
  while (shown > 1 && entries[shown - 1] == 0) --shown;
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < shown; ++i) out << (i ? ", " : "") << entries[i];
  out << ")";
  return out.str();
}

RationalPolynomial char_polynomial(const Structure& h, SubmonoidId s, const Limits& limits) {
  const int n = h.size();
  std::vector<BigInt> values;
  for (int k = 0; k <= n; ++k) values.push_back(count_s_proper(h, s, k, limits));
  RationalPolynomial p = RationalPolynomial::from_values(values);
  const BigInt check = count_s_proper(h, s, n + 1, limits);
  if (p(Rational(n + 1)) != Rational(check)) {
    throw ConsistencyError("characteristic polynomial fails verification at k = " + std::to_string(n + 1));
  }
  return p;
}

HVector w_transform(const RationalPolynomial& p) {
  HVector h;
  const auto d = p.degree();
  if (!d) return h;
  std::vector<BigInt> values;
  for (int k = 0; k <= *d; ++k) {
    const Rational v = p(Rational(k));
    if (boost::multiprecision::denominator(v) != 1) {
      throw InvalidInput("polynomial is not integer-valued at k = " + std::to_string(k));
    }
    values.push_back(boost::multiprecision::numerator(v));
  }
  for (int j = 0; j <= *d; ++j) {
    BigInt hj = 0;
    for (int i = 0; i <= j; ++i) {
      const BigInt term = binomial(*d + 1, i) * values[static_cast<std::size_t>(j - i)];
      hj += (i % 2 == 0) ? term : BigInt(-term);
    }
    h.entries.push_back(hj);
  }
  return h;
}

HVector h_vector_shifted(const Structure& h, SubmonoidId s, const Limits& limits) {
  return w_transform(char_polynomial(h, s, limits).shifted(1));
}

std::string render_composition(const Composition& alpha) {
  std::string out;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(alpha[i]);
  }
  return out;
}

std::string QSymExpansion::display() const {
  if (coefficients.empty()) return "0";
  const char symbol = basis == QSymBasis::Monomial ? 'M' : 'F';
  std::ostringstream out;
  bool first = true;
  for (const auto& [alpha, c] : coefficients) {
    BigInt magnitude = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (magnitude != 1) out << magnitude;
    out << symbol << "(" << render_composition(alpha) << ")";
  }
  return out.str();
}

std::vector<Composition> compositions(int n) {
  std::vector<Composition> out;
  if (n == 0) return {Composition{}};
  // bit i of m set: cut after position i + 1
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << (n - 1)); ++m) {
    Composition alpha;
    int part = 1;
    for (int i = 0; i < n - 1; ++i) {
      if (m & (std::uint32_t{1} << i)) {
        alpha.push_back(part);
        part = 1;
      } else {
        ++part;
      }
    }
    alpha.push_back(part);
    out.push_back(std::move(alpha));
  }
  return out;
}

std::vector<Composition> refinements(const Composition& alpha) {
  std::vector<Composition> out{Composition{}};
  for (int part : alpha) {
    std::vector<Composition> next;
    for (const auto& prefix : out) {
      for (const auto& piece : compositions(part)) {
        Composition joined = prefix;
        joined.insert(joined.end(), piece.begin(), piece.end());
        next.push_back(std::move(joined));
      }
    }
    out = std::move(next);
  }
  return out;
}

QSymExpansion qsym_monomial(const Structure& h, SubmonoidId s) {
  QSymExpansion q;
  q.basis = QSymBasis::Monomial;
  q.degree = h.size();
  for (auto& [alpha, c] : proper_set_composition_counts(h, s)) {
    if (c != 0) q.coefficients.emplace(alpha, c);
  }
  return q;
}

namespace {

QSymExpansion change_basis(const QSymExpansion& q, QSymBasis target, bool alternating) {
  QSymExpansion out;
  out.basis = target;
  out.degree = q.degree;
  for (const auto& [alpha, c] : q.coefficients) {
    for (const auto& beta : refinements(alpha)) {
      const bool negate = alternating && (beta.size() - alpha.size()) % 2 == 1;
      out.coefficients[beta] += negate ? BigInt(-c) : c;
    }
  }
  std::erase_if(out.coefficients, [](const auto& entry) { return entry.second == 0; });
  return out;
}

}  // namespace

QSymExpansion to_fundamental(const QSymExpansion& q) {
  if (q.basis != QSymBasis::Monomial) throw InvalidInput("expansion is not in the monomial basis");
  return change_basis(q, QSymBasis::Fundamental, true);
}

QSymExpansion to_monomial(const QSymExpansion& q) {
  if (q.basis != QSymBasis::Fundamental) throw InvalidInput("expansion is not in the fundamental basis");
  return change_basis(q, QSymBasis::Monomial, false);
}

bool is_h_positive(const HVector& v) {
  for (const auto& e : v.entries) {
    if (e < 0) return false;
  }
  return true;
}

bool is_f_positive(const QSymExpansion& q) {
  if (q.basis != QSymBasis::Fundamental) throw InvalidInput("F-positivity needs the fundamental basis");
  for (const auto& [alpha, c] : q.coefficients) {
    if (c < 0) return false;
  }
  return true;
}

RationalPolynomial order_polynomial(const DoublePoset& p, const Limits& limits) {
  const Structure h(p);
  RationalPolynomial omega = char_polynomial(h, SubmonoidId::InversionFree, limits);
  const int n = p.size();
  for (int k = 0; k <= n + 1; ++k) {
    BigInt direct = 0;
    if (n == 0) {
      direct = 1;
    } else if (k > 0) {
      std::vector<int> f(static_cast<std::size_t>(n), 1);
      while (true) {
        if (is_p_partition(p, f, k)) ++direct;
        int i = 0;
        while (i < n && f[static_cast<std::size_t>(i)] == k) f[static_cast<std::size_t>(i++)] = 1;
        if (i == n) break;
        ++f[static_cast<std::size_t>(i)];
      }
    }
    if (omega(Rational(k)) != Rational(direct)) {
      throw ConsistencyError("order polynomial disagrees with the p-partition count at k = " + std::to_string(k));
    }
  }
  return omega;
}

}  // namespace hopfcm
