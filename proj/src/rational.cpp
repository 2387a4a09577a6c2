#include "moduli/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace moduli {

Rational::Rational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_ == 0) throw std::domain_error("Rational: zero denominator");
  reduce();
}

void Rational::reduce() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational& Rational::operator+=(const Rational& other) {
  num_ = num_ * other.den_ + other.num_ * den_;
  den_ *= other.den_;
  reduce();
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  num_ = num_ * other.den_ - other.num_ * den_;
  den_ *= other.den_;
  reduce();
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  num_ *= other.num_;
  den_ *= other.den_;
  reduce();
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.num_ == 0) throw std::domain_error("Rational: division by zero");
  num_ *= other.den_;
  den_ *= other.num_;
  reduce();
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  std::string s = num_.str();
  if (den_ != 1) {
    s += '/';
    s += den_.str();
  }
  return s;
}

Rational Rational::from_string(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("Rational: empty string");
  auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(BigInt(std::string(text)));
    }
    BigInt num{std::string(text.substr(0, slash))};
    BigInt den{std::string(text.substr(slash + 1))};
    return Rational(std::move(num), std::move(den));
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("Rational: malformed value '" + std::string(text) + "'");
  }
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt b = 1;
  for (unsigned i = 0; i < k; ++i) {
    b *= n - i;
    b /= i + 1;
  }
  return b;
}

Rational pow2(int e) {
  BigInt p = BigInt(1) << static_cast<unsigned>(e < 0 ? -e : e);
  return e >= 0 ? Rational(std::move(p)) : Rational(1, std::move(p));
}

}  // namespace moduli
