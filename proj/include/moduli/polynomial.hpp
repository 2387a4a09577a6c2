#pragma once

// Dense univariate polynomial over Rational in the formal variable q.
// Carrier for the finite-field point counts produced by the oracle.

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "moduli/rational.hpp"

namespace moduli {

class Polynomial {
 public:
  Polynomial() = default;  // zero polynomial (empty coefficient list)
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  static Polynomial constant(Rational c);
  static Polynomial monomial(Rational c, std::size_t degree);

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
  }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational evaluate(const Rational& x) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);
  Polynomial operator-() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // Human-readable form like "q^3 - q".
  std::string str() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;  // coeffs_[k] multiplies q^k; trailing zeros trimmed
};

// Exact quotient num/den; throws std::domain_error("not divisible") on a
// nonzero remainder. A failure here signals an oracle bug: every point count
// it divides must be a multiple of |PGL2(F_q)| = q^3 - q.
Polynomial exact_div(const Polynomial& num, const Polynomial& den);

}  // namespace moduli
