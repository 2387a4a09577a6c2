#include "moduli/power_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace moduli {

PowerSeries::PowerSeries(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw std::domain_error("PowerSeries: order must be positive");
}

PowerSeries PowerSeries::zero(std::size_t order) {
  return PowerSeries(std::vector<Rational>(order));
}

PowerSeries PowerSeries::constant(Rational c, std::size_t order) {
  std::vector<Rational> v(order);
  v[0] = std::move(c);
  return PowerSeries(std::move(v));
}

PowerSeries PowerSeries::identity(std::size_t order) {
  if (order < 2) throw std::domain_error("PowerSeries: order too small for t");
  std::vector<Rational> v(order);
  v[1] = Rational(1);
  return PowerSeries(std::move(v));
}

const Rational& PowerSeries::coeff(std::size_t k) const {
  if (k >= coeffs_.size()) {
    throw std::out_of_range("PowerSeries: coefficient " + std::to_string(k) +
                            " beyond truncation order " + std::to_string(coeffs_.size()));
  }
  return coeffs_[k];
}

PowerSeries PowerSeries::truncated(std::size_t order) const {
  if (order == 0 || order > coeffs_.size()) {
    throw std::domain_error("PowerSeries::truncated: bad order");
  }
  return PowerSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order));
}

PowerSeries PowerSeries::operator-() const {
  std::vector<Rational> v(coeffs_.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = -coeffs_[k];
  return PowerSeries(std::move(v));
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = a.coeffs_[k] + b.coeffs_[k];
  return PowerSeries(std::move(v));
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = a.coeffs_[k] - b.coeffs_[k];
  return PowerSeries(std::move(v));
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (!b.coeffs_[j].is_zero()) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return PowerSeries(std::move(v));
}

PowerSeries operator*(const Rational& s, const PowerSeries& a) {
  std::vector<Rational> v(a.order());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = s * a.coeffs_[k];
  return PowerSeries(std::move(v));
}

PowerSeries operator+(const PowerSeries& a, const Rational& s) {
  std::vector<Rational> v = a.coefficients();
  v[0] += s;
  return PowerSeries(std::move(v));
}

PowerSeries PowerSeries::pow(unsigned exponent) const {
  PowerSeries result = PowerSeries::constant(Rational(1), order());
  for (unsigned i = 0; i < exponent; ++i) result = result * *this;
  return result;
}

std::string PowerSeries::str() const {
  std::string out;
  bool any = false;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    Rational mag = c.sign() < 0 ? -c : c;
    if (!any) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    bool unit = mag == Rational(1);
    if (k == 0 || !unit) out += mag.str();
    if (k > 0) {
      if (!unit) out += "*";
      out += "t";
      if (k > 1) out += "^" + std::to_string(k);
    }
    any = true;
  }
  if (!any) out = "0";
  out += " + O(t^" + std::to_string(coeffs_.size()) + ")";
  return out;
}

PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner) {
  if (!inner.zero_constant_term()) {
    throw std::domain_error("compose: inner series must have zero constant term");
  }
  std::size_t n = std::min(outer.order(), inner.order());
  PowerSeries in = inner.truncated(n);
  // Horner over truncated series.
  PowerSeries result = PowerSeries::constant(outer.coeff(n - 1), n);
  for (std::size_t k = n - 1; k-- > 0;) {
    result = result * in + outer.coeff(k);
  }
  return result;
}

PowerSeries log1p(const PowerSeries& f) {
  if (!f.zero_constant_term()) {
    throw std::domain_error("log1p: series must have zero constant term");
  }
  std::size_t n = f.order();
  std::vector<Rational> outer(n);
  for (std::size_t k = 1; k < n; ++k) {
    outer[k] = Rational(k % 2 == 1 ? 1 : -1, BigInt(k));
  }
  return compose(PowerSeries(std::move(outer)), f);
}

PowerSeries exp(const PowerSeries& f) {
  if (!f.zero_constant_term()) {
    throw std::domain_error("exp: series must have zero constant term");
  }
  std::size_t n = f.order();
  std::vector<Rational> outer(n);
  for (std::size_t k = 0; k < n; ++k) outer[k] = Rational(1, factorial(k));
  return compose(PowerSeries(std::move(outer)), f);
}

PowerSeries reciprocal(const PowerSeries& f) {
  if (f.zero_constant_term()) {
    throw std::domain_error("reciprocal: series must have nonzero constant term");
  }
  std::size_t n = f.order();
  std::vector<Rational> g(n);
  g[0] = Rational(1) / f.coeff(0);
  for (std::size_t m = 1; m < n; ++m) {
    Rational s(0);
    for (std::size_t k = 1; k <= m; ++k) s += f.coeff(k) * g[m - k];
    g[m] = -s / f.coeff(0);
  }
  return PowerSeries(std::move(g));
}

PowerSeries derivative(const PowerSeries& f) {
  if (f.order() < 2) throw std::domain_error("derivative: order too small");
  std::vector<Rational> v(f.order() - 1);
  for (std::size_t k = 0; k < v.size(); ++k) {
    v[k] = Rational(BigInt(k + 1)) * f.coeff(k + 1);
  }
  return PowerSeries(std::move(v));
}

}  // namespace moduli
