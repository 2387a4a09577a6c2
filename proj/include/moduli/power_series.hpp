#pragma once

// Truncated formal power series over Rational in the variable t.
//
// A series of order N stores the coefficients of t^0 .. t^(N-1); coefficients
// at or beyond the order are unknown, not zero, and reading one is an error.
// Binary operations truncate to the smaller operand order.

#include <cstddef>
#include <string>
#include <vector>

#include "moduli/rational.hpp"

namespace moduli {

class PowerSeries {
 public:
  // Order = size of the coefficient list; must be >= 1.
  explicit PowerSeries(std::vector<Rational> coefficients);

  static PowerSeries zero(std::size_t order);
  static PowerSeries constant(Rational c, std::size_t order);
  static PowerSeries identity(std::size_t order);  // t

  std::size_t order() const { return coeffs_.size(); }
  // Throws std::out_of_range for k >= order: truncated coefficients are
  // unknown, never silently zero.
  const Rational& coeff(std::size_t k) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool zero_constant_term() const { return coeffs_[0].is_zero(); }

  PowerSeries truncated(std::size_t order) const;

  PowerSeries operator-() const;
  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const Rational& s, const PowerSeries& a);
  friend PowerSeries operator*(const PowerSeries& a, const Rational& s) { return s * a; }
  friend PowerSeries operator+(const PowerSeries& a, const Rational& s);
  friend PowerSeries operator+(const Rational& s, const PowerSeries& a) { return a + s; }
  friend PowerSeries operator-(const PowerSeries& a, const Rational& s) { return a + (-s); }

  // Exact comparison of coefficient lists (orders must match too).
  friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

  PowerSeries pow(unsigned exponent) const;

  std::string str() const;

 private:
  std::vector<Rational> coeffs_;
};

// outer(inner(t)) truncated to min(order(outer), order(inner)); inner must
// have zero constant term (otherwise composition of truncations is ill-defined).
PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner);

// log(1+f) for f with zero constant term; preserves the order of f.
PowerSeries log1p(const PowerSeries& f);

// exp(f) for f with zero constant term; preserves order.
PowerSeries exp(const PowerSeries& f);

// g with f*g = 1 to truncation; requires nonzero constant term.
PowerSeries reciprocal(const PowerSeries& f);

// Formal d/dt; reduces the order by one (the top coefficient is unknown).
PowerSeries derivative(const PowerSeries& f);

}  // namespace moduli
