#include "moduli/polynomial.hpp"

#include <stdexcept>

namespace moduli {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) {
  trim();
}

Polynomial Polynomial::constant(Rational c) { return Polynomial({std::move(c)}); }

Polynomial Polynomial::monomial(Rational c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = std::move(c);
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational value(0);
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    value = value * x + coeffs_[k];
  }
  return value;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  if (coeffs_.empty() || other.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> result(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      result[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  coeffs_ = std::move(result);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::string Polynomial::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    Rational mag = c.sign() < 0 ? -c : c;
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    bool unit = mag == Rational(1);
    if (k == 0 || !unit) out += mag.str();
    if (k > 0) {
      if (!unit) out += "*";
      out += "q";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

Polynomial exact_div(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw std::domain_error("exact_div: zero divisor");
  if (num.is_zero()) return Polynomial{};
  if (num.degree() < den.degree()) throw std::domain_error("not divisible");

  std::vector<Rational> rem = num.coefficients();
  const auto& d = den.coefficients();
  std::vector<Rational> quot(rem.size() - d.size() + 1);
  for (std::size_t k = quot.size(); k-- > 0;) {
    Rational c = rem[k + d.size() - 1] / d.back();
    quot[k] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] -= c * d[j];
  }
  for (const auto& r : rem) {
    if (!r.is_zero()) throw std::domain_error("not divisible");
  }
  return Polynomial(std::move(quot));
}

}  // namespace moduli
