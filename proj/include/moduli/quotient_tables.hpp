#pragma once

// Closed-form / table-driven Euler characteristics of quotients of (products
// of) M_{0,n} and M_{1,n} by the symmetric-group actions on marked points.
// Validity ranges are enforced strictly; inputs outside a stated range are
// errors, never extrapolated.

#include <optional>
#include <string>
#include <vector>

#include "moduli/permutation.hpp"
#include "moduli/rational.hpp"

namespace moduli {

enum class QuotientKind {
  M0ModSj,         // M_{0,n} / S_j, S_j permuting the last j markings
  M0ModKlein,      // M_{0,n} / (S_2 x S_2), pairs (n-3,n-2) and (n-1,n)
  M0ModD4,         // M_{0,n} / D_4 = <(1 2), (1 3)(2 4)> on the first four
  Prod2ModS2,      // (M_{0,n1} x M_{0,n2}) / S_2, last-two swap in each factor
  Prod2ModS3,      // (M_{0,n1} x M_{0,n2}) / S_3, last-three diagonal action
  Prod2ModKlein,   // (M_{0,n1} x M_{0,n2}) / (S_2 x S_2)
  Prod3ModKlein,   // (M_{0,n1} x M_{0,n2} x M_{0,n3}) / (S_2 x S_2)
  M1ModS2,         // M_{1,n} / S_2, last-two swap
  M1CrossM0ModS2,  // (M_{1,n1} x M_{0,n2}) / S_2, simultaneous last-two swaps
};

struct QuotientSpec {
  QuotientKind kind;
  std::vector<int> sizes;  // n, or n1 <= n2, or n1, n2, n3 per kind
  std::optional<int> j;    // number of symmetrized points, for M0ModSj

  std::string kind_name() const;
  static std::optional<QuotientKind> kind_from_name(const std::string& name);
};

Rational chi_m0_mod_Sj(int n, int j);
Rational chi_m0_mod_klein(int n);
Rational chi_m0_mod_D4(int n);
Rational chi_prod2_mod_S2(int n1, int n2);
Rational chi_prod2_mod_S3(int n1, int n2);
Rational chi_prod2_mod_klein(int n1, int n2);
Rational chi_prod3_mod_klein(int n1, int n2, int n3);
Rational chi_m1_mod_S2(int n);
Rational chi_m1_cross_m0_mod_S2(int n1, int n2);

// Dispatch on a QuotientSpec; validates arity and ranges.
Rational chi_quotient(const QuotientSpec& spec);

// The concrete permutation-group action realizing a genus-0 quotient, with
// the concrete generator choices the tables assume; input for the counting oracle.
// Throws for kinds with an elliptic factor (non-polynomial point counts).
PermutationGroupAction action_for(const QuotientSpec& spec);

}  // namespace moduli
