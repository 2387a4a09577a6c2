#pragma once

// Exact rational scalar over arbitrary-precision integers. Always stored
// reduced with a positive denominator; serialized as "p/q" ("p" when q = 1).

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace moduli {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long value) : num_(value), den_(1) {}  // NOLINT: implicit by design
  Rational(BigInt value) : num_(std::move(value)), den_(1) {}
  Rational(BigInt numerator, BigInt denominator);

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);
  Rational operator-() const;

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // "p/q" with "/q" omitted when q = 1, e.g. "181/6", "-24".
  std::string str() const;
  static Rational from_string(std::string_view text);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  void reduce();

  BigInt num_;
  BigInt den_;  // > 0
};

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

// 2^e as an exact rational; e may be negative (the strata coefficients use 2^-1).
Rational pow2(int e);

}  // namespace moduli
