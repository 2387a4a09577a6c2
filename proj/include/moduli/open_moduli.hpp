#pragma once

// Euler characteristics of the open moduli spaces M_{0,n}, M_{1,n}, M_{2,n}:
// closed forms, the involution stratifications that re-derive them, and the
// universal-curve recursions.

#include "moduli/rational.hpp"

namespace moduli {

// (-1)^(n-3) (n-3)!, n >= 3.
Rational chi_m0_open(int n);

// 1, 1, 0, 0 for n = 1..4; (-1)^n (n-1)!/12 for n >= 5.
Rational chi_m1_open(int n);

// 1, 2, 2, 0, -4, 0, -24 for n = 0..6; (-1)^(n+1) (n+1)!/240 for n >= 7.
Rational chi_m2_open(int n);

// A stratum of the hyperelliptic-involution stratification: j fixed marked
// points and r marked conjugate pairs. For genus 1 the involution is centred
// at the last marked point, which j does not count.
struct StratumSpec {
  int genus = 2;
  int n = 0;
  int j = 0;
  int r = 0;

  bool valid() const;
};

// Number of subvarieties of type {j,r}: C(n,j) (n-j)! / (2^r (n-j-2r)! r!).
Rational a_jr(int n, int j, int r);

// chi of one genus-2 stratum U_{j,r} via the covering onto M_{0,n+6-r-j}/S_{6-j}.
Rational chi_U_jr(const StratumSpec& spec);

// Sum of a_{j,r} chi(U_{j,r}) over the genus-2 strata; defined for 0 <= n <= 6
// (use chi_m2_recursive beyond).
Rational chi_m2_via_strata(int n);

// chi(M_{2,7}) = 168 from the two-piece universal-curve fiber over M_{2,6};
// then chi(M_{2,n}) = -(n+1) chi(M_{2,n-1}) for n >= 8.
Rational chi_m2_recursive(int n);

// Genus-1 stratification formula including the 1/2 chi(M_{0,4}/S_{3-n})
// boundary term; defined for 1 <= n <= 4.
Rational chi_m1_via_strata(int n);

// chi(M_{1,5}) = -4 chi(M_{1,4}) - 2; then chi(M_{1,n}) = -(n-1) chi(M_{1,n-1}).
Rational chi_m1_recursive(int n);

}  // namespace moduli
