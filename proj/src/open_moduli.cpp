#include "moduli/open_moduli.hpp"

#include <algorithm>
#include <stdexcept>

#include "moduli/quotient_tables.hpp"

namespace moduli {

Rational chi_m0_open(int n) {
  if (n < 3) throw std::domain_error("chi_m0_open: need n >= 3");
  BigInt value = factorial(n - 3);
  return (n - 3) % 2 == 0 ? Rational(value) : Rational(-value);
}

Rational chi_m1_open(int n) {
  if (n < 1) throw std::domain_error("chi_m1_open: need n >= 1");
  switch (n) {
    case 1:
    case 2:
      return 1;
    case 3:
    case 4:
      return 0;
    default: {
      Rational value(factorial(n - 1), 12);
      return n % 2 == 0 ? value : -value;
    }
  }
}

Rational chi_m2_open(int n) {
  if (n < 0) throw std::domain_error("chi_m2_open: need n >= 0");
  static const int table[7] = {1, 2, 2, 0, -4, 0, -24};
  if (n <= 6) return table[n];
  Rational value(factorial(n + 1), 240);
  return (n + 1) % 2 == 0 ? value : -value;
}

bool StratumSpec::valid() const {
  if (n < 0 || j < 0 || r < 0) return false;
  if (genus == 2) {
    return j <= std::min(n, 6) && 2 * r <= n - j;
  }
  if (genus == 1) {
    // The involution's centre is the last marked point, not counted in j.
    return n >= 1 && j <= n - 1 && 2 * r <= n - 1 - j;
  }
  return false;
}

Rational a_jr(int n, int j, int r) {
  StratumSpec spec{2, n, j, r};
  if (!spec.valid()) throw std::domain_error("a_jr: invalid (n, j, r)");
  Rational numerator(binomial(n, j) * factorial(n - j));
  Rational denominator((BigInt(1) << r) * factorial(n - j - 2 * r) * factorial(r));
  return numerator / denominator;
}

Rational chi_U_jr(const StratumSpec& spec) {
  if (spec.genus != 2 || !spec.valid()) throw std::domain_error("chi_U_jr: invalid stratum");
  const int n = spec.n, j = spec.j, r = spec.r;
  Rational base = chi_m0_mod_Sj(n + 6 - r - j, 6 - j);
  if (j == n && r == 0) return base;  // the covering is an isomorphism
  if (j == 0 && n - r == 2) {
    // The three ramified cases U_{0,0} in M_{2,2}, U_{0,1} in M_{2,3},
    // U_{0,2} in M_{2,4}: double cover ramified along a copy of M_{0,5}/S_3.
    return Rational(2) * base - chi_m0_mod_Sj(5, 3);
  }
  return pow2(n - j - r - 1) * base;
}

Rational chi_m2_via_strata(int n) {
  if (n < 0) throw std::domain_error("chi_m2_via_strata: need n >= 0");
  if (n > 6) {
    throw std::domain_error("chi_m2_via_strata: defined for n <= 6; use chi_m2_recursive");
  }
  Rational sum(0);
  for (int j = 0; j <= std::min(n, 6); ++j) {
    for (int r = 0; 2 * r <= n - j; ++r) {
      sum += a_jr(n, j, r) * chi_U_jr({2, n, j, r});
    }
  }
  return sum;
}

Rational chi_m2_recursive(int n) {
  if (n < 7) throw std::domain_error("chi_m2_recursive: need n >= 7");
  // chi(M_{2,7}) = -8 (chi(M_{2,6}) - chi(M_{0,6})) - 4 chi(M_{0,6}), with
  // chi(M_{2,6}) from the strata path.
  Rational chi6 = chi_m2_via_strata(6);
  Rational value = Rational(-8) * chi6 - 24;
  // Fiber of M_{2,k} -> M_{2,k-1} is a genus-2 curve minus k-1 points.
  for (int k = 8; k <= n; ++k) value *= Rational(-(k + 1));
  return value;
}

Rational chi_m1_via_strata(int n) {
  if (n < 1 || n > 4) throw std::domain_error("chi_m1_via_strata: defined for 1 <= n <= 4");
  const int m = n - 1;  // markings other than the involution's centre
  Rational sum(0);
  for (int j = 0; j <= m; ++j) {
    for (int r = 0; 2 * r <= m - j; ++r) {
      Rational coeff = Rational(binomial(m, j) * factorial(m - j)) /
                       Rational(factorial(m - j - 2 * r) * factorial(r));
      coeff *= pow2(m - j - 2 * r - 1);
      sum += coeff * chi_m0_mod_Sj(m - r + 4 - j, 3 - j);
    }
  }
  sum += Rational(1, 2) * chi_m0_mod_Sj(4, 3 - m);
  return sum;
}

Rational chi_m1_recursive(int n) {
  if (n < 5) throw std::domain_error("chi_m1_recursive: need n >= 5");
  // chi(M_{1,5}) from the two-piece fiber over M_{1,4}; strata value for M_{1,4}.
  Rational value = Rational(-4) * chi_m1_via_strata(4) - 2;
  // Fiber of M_{1,k} -> M_{1,k-1} is a genus-1 curve minus k-1 points.
  for (int k = 6; k <= n; ++k) value *= Rational(-(k - 1));
  return value;
}

}  // namespace moduli
