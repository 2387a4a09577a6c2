#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "moduli/counting_oracle.hpp"
#include "moduli/open_moduli.hpp"

using namespace moduli;

namespace {
Polynomial q_poly() { return Polynomial::monomial(Rational(1), 1); }
}  // namespace

TEST_CASE("exact degree counts") {
  Polynomial q = q_poly();
  CHECK(exact_degree_count(1) == q + Polynomial::constant(Rational(1)));          // q + 1
  CHECK(exact_degree_count(2) == q * q - q);                                      // q^2 - q
  // l = 6: q^6 - q^3 - q^2 + q via the Mobius sum over divisors
  Polynomial m6 = Polynomial::monomial(Rational(1), 6) - Polynomial::monomial(Rational(1), 3) -
                  q * q + q;
  CHECK(exact_degree_count(6) == m6);
  CHECK_THROWS_AS(exact_degree_count(0), std::domain_error);
}

TEST_CASE("twisted counts") {
  Polynomial q = q_poly();
  CHECK(twisted_count(4, MarkedPermutation::identity(4)) ==
        q - Polynomial::constant(Rational(2)));
  CHECK(twisted_count(4, MarkedPermutation::transposition(4, 3, 4)) == q);
  CHECK(twisted_count(3, MarkedPermutation::identity(3)) ==
        Polynomial::constant(Rational(1)));
  CHECK_THROWS_AS(twisted_count(2, MarkedPermutation::identity(2)), std::domain_error);
}

TEST_CASE("Burnside with the trivial group degenerates to the plain count") {
  for (int n = 3; n <= 10; ++n) {
    CHECK(burnside_quotient_chi(PermutationGroupAction::trivial({n})) == chi_m0_open(n));
  }
}

TEST_CASE("Klein quotient of M_{0,6}") {
  auto action = PermutationGroupAction::from_generators(
      {6}, {{MarkedPermutation::transposition(6, 3, 4)},
            {MarkedPermutation::transposition(6, 5, 6)}});
  Polynomial average = burnside_average(action);
  CHECK(average.evaluate(Rational(1)) == Rational(-2));

  // 1/4 [(q-2)(q-3)(q-4) + 2 q(q-1)(q-2) + q(q-2)(q+1)]
  Polynomial q = q_poly();
  auto c = [](long long v) { return Polynomial::constant(Rational(v)); };
  Polynomial expected = (q - c(2)) * (q - c(3)) * (q - c(4)) +
                        Rational(2) * (q * (q - c(1)) * (q - c(2))) +
                        q * (q - c(2)) * (q + c(1));
  expected *= Rational(1, 4);
  CHECK(average == expected);
}

TEST_CASE("single swap on M_{0,4}") {
  auto action = PermutationGroupAction::from_generators(
      {4}, {{MarkedPermutation::transposition(4, 3, 4)}});
  CHECK(burnside_quotient_chi(action) == Rational(0));  // 1/2 [(q-2) + q] at q = 1
}

TEST_CASE("product action") {
  // (M_{0,4} x M_{0,5}) / S_3 acting diagonally on the last three markings.
  auto diag = PermutationGroupAction::from_generators(
      {4, 5}, {{MarkedPermutation::transposition(4, 3, 4),
                MarkedPermutation::transposition(5, 4, 5)},
               {MarkedPermutation::from_cycles(4, {{2, 3, 4}}),
                MarkedPermutation::from_cycles(5, {{3, 4, 5}})}});
  CHECK(burnside_quotient_chi(diag) == Rational(1));
}

TEST_CASE("counting polynomials take nonnegative integer values at prime powers") {
  auto action = PermutationGroupAction::from_generators(
      {7}, {{MarkedPermutation::transposition(7, 4, 5)},
            {MarkedPermutation::transposition(7, 6, 7)}});
  Polynomial average = burnside_average(action);
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    Rational value = average.evaluate(Rational(q));
    CHECK(value.is_integer());
    CHECK(value.sign() >= 0);
  }
}

TEST_CASE("factors below three markings are rejected") {
  CHECK_THROWS_AS(burnside_average(PermutationGroupAction::trivial({2})), std::domain_error);
}
