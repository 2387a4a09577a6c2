#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "moduli/counting_oracle.hpp"
#include "moduli/open_moduli.hpp"
#include "moduli/quotient_tables.hpp"

using namespace moduli;

TEST_CASE("M_{0,n}/S_j") {
  CHECK(chi_m0_mod_Sj(9, 6) == Rational(1));   // 6!/6! with positive sign
  CHECK(chi_m0_mod_Sj(8, 6) == Rational(0));   // n-j = 2, n even
  CHECK(chi_m0_mod_Sj(5, 3) == Rational(1));   // n-j = 2, n odd
  CHECK(chi_m0_mod_Sj(7, 0) == Rational(24));  // plain chi(M_{0,7})
  CHECK(chi_m0_mod_Sj(9, 9) == Rational(1));
  CHECK(chi_m0_mod_Sj(9, 8) == Rational(1));
  CHECK(chi_m0_mod_Sj(8, 2) == Rational(-60));
  CHECK_THROWS_AS(chi_m0_mod_Sj(2, 0), std::domain_error);
  CHECK_THROWS_AS(chi_m0_mod_Sj(5, 6), std::domain_error);
}

TEST_CASE("M_{0,n} modulo the Klein group and D_4") {
  CHECK(chi_m0_mod_klein(4) == Rational(0));
  CHECK(chi_m0_mod_klein(5) == Rational(0));
  CHECK(chi_m0_mod_klein(6) == Rational(-2));
  CHECK(chi_m0_mod_klein(7) == Rational(6));  // 24/4
  CHECK_THROWS_AS(chi_m0_mod_klein(3), std::domain_error);

  CHECK(chi_m0_mod_D4(4) == Rational(0));
  CHECK(chi_m0_mod_D4(5) == Rational(0));
  CHECK(chi_m0_mod_D4(6) == Rational(-1));
  CHECK(chi_m0_mod_D4(7) == Rational(3));  // 24/8
  CHECK_THROWS_AS(chi_m0_mod_D4(3), std::domain_error);
}

TEST_CASE("pair products") {
  CHECK(chi_prod2_mod_S2(3, 6) == Rational(-3));
  CHECK(chi_prod2_mod_S2(4, 6) == Rational(3));  // -3 - (-6)
  CHECK(chi_prod2_mod_S2(5, 5) == Rational(2));
  CHECK_THROWS_AS(chi_prod2_mod_S2(5, 4), std::domain_error);

  CHECK(chi_prod2_mod_S3(4, 4) == Rational(2));
  CHECK(chi_prod2_mod_S3(4, 5) == Rational(1));
  CHECK(chi_prod2_mod_S3(5, 5) == Rational(2));
  CHECK(chi_prod2_mod_S3(4, 6) == Rational(1));  // (-1)(-6)/6
  CHECK(chi_prod2_mod_S3(3, 7) == chi_m0_mod_Sj(7, 3));

  CHECK(chi_prod2_mod_klein(4, 4) == Rational(0));
  CHECK(chi_prod2_mod_klein(4, 5) == Rational(-1));
  CHECK(chi_prod2_mod_klein(4, 6) == Rational(1));
  CHECK(chi_prod2_mod_klein(3, 6) == Rational(-2));  // delegates to the Klein table
  CHECK(chi_prod2_mod_klein(5, 5) == Rational(1));   // (1/2) * 2 * 1
  CHECK_THROWS_AS(chi_prod2_mod_klein(5, 4), std::domain_error);
  CHECK_THROWS_WITH_AS(chi_prod2_mod_klein(4, 7),
                       "chi_prod2_mod_klein: (4, n2 >= 7) is outside the tabulated range",
                       std::domain_error);
}

TEST_CASE("triple products") {
  CHECK(chi_prod3_mod_klein(4, 4, 4) == Rational(-1));
  CHECK(chi_prod3_mod_klein(4, 4, 5) == Rational(0));
  CHECK(chi_prod3_mod_klein(4, 4, 6) == Rational(-2));
  CHECK(chi_prod3_mod_klein(4, 4, 7) == Rational(6));  // 24/4
  CHECK(chi_prod3_mod_klein(3, 4, 5) == Rational(-1));  // delegation to the pair table
  CHECK(chi_prod3_mod_klein(4, 5, 4) == Rational(1));   // (1/2) chi_prod2_mod_S2(4,4) chi(M_{0,5})
  CHECK(chi_prod3_mod_klein(5, 5, 4) == Rational(-1));  // (1/2) chi_prod2_mod_S2(4,5) chi(M_{0,5})
  // case-i delegation inherits the pair range and refuses outside it
  CHECK_THROWS_AS(chi_prod3_mod_klein(3, 5, 4), std::domain_error);
  CHECK_THROWS_AS(chi_prod3_mod_klein(2, 4, 4), std::domain_error);
  CHECK_THROWS_AS(chi_prod3_mod_klein(4, 4, 3), std::domain_error);
}

TEST_CASE("elliptic quotients") {
  CHECK(chi_m1_mod_S2(2) == Rational(1));
  CHECK(chi_m1_mod_S2(3) == Rational(1));
  CHECK(chi_m1_mod_S2(4) == Rational(1));
  CHECK(chi_m1_mod_S2(5) == Rational(0));
  CHECK(chi_m1_mod_S2(6) == Rational(6));
  CHECK(chi_m1_mod_S2(7) == Rational(-30));  // (1/2)(-1)^7 6!/12
  CHECK_THROWS_AS(chi_m1_mod_S2(1), std::domain_error);

  CHECK(chi_m1_cross_m0_mod_S2(2, 3) == Rational(1));
  CHECK(chi_m1_cross_m0_mod_S2(2, 4) == Rational(0));   // 1 - chi(M_{1,2})
  CHECK(chi_m1_cross_m0_mod_S2(5, 5) == Rational(-2));  // (1/2) * 2 * (-2)
  CHECK(chi_m1_cross_m0_mod_S2(1, 3) == Rational(1));   // trivial action on M_{1,1}
  CHECK(chi_m1_cross_m0_mod_S2(1, 4) == Rational(0));
  CHECK(chi_m1_cross_m0_mod_S2(1, 6) == chi_m0_mod_Sj(6, 2));
  CHECK_THROWS_AS(chi_m1_cross_m0_mod_S2(0, 3), std::domain_error);
  CHECK_THROWS_AS(chi_m1_cross_m0_mod_S2(2, 2), std::domain_error);
}

TEST_CASE("branch locus of the pair-swap quotient") {
  // chi(U_n) = 2 chi(M_{0,n}/S_2) - chi(M_{0,n}): one branch point at n = 4,
  // none from n = 5 on (a rational curve with >= 3 other markings is rigid).
  CHECK(Rational(2) * chi_m0_mod_Sj(4, 2) - chi_m0_open(4) == Rational(1));
  for (int n = 5; n <= 9; ++n) {
    CHECK(Rational(2) * chi_m0_mod_Sj(n, 2) - chi_m0_open(n) == Rational(0));
  }
}

TEST_CASE("every in-range table value is an integer") {
  auto check_integer = [](const Rational& value) {
    CHECK(value.is_integer());
  };
  for (int n = 3; n <= 9; ++n) {
    for (int j = 0; j <= n; ++j) check_integer(chi_m0_mod_Sj(n, j));
  }
  for (int n = 4; n <= 9; ++n) {
    check_integer(chi_m0_mod_klein(n));
    check_integer(chi_m0_mod_D4(n));
  }
  for (int n1 = 3; n1 <= 9; ++n1) {
    for (int n2 = n1; n2 <= 9; ++n2) {
      check_integer(chi_prod2_mod_S2(n1, n2));
      check_integer(chi_prod2_mod_S3(n1, n2));
      try {
        check_integer(chi_prod2_mod_klein(n1, n2));
      } catch (const std::domain_error&) {
      }
      for (int n3 = 4; n3 <= 9; ++n3) {
        try {
          check_integer(chi_prod3_mod_klein(n1, n2, n3));
        } catch (const std::domain_error&) {
        }
      }
    }
  }
  for (int n = 2; n <= 12; ++n) check_integer(chi_m1_mod_S2(n));
  for (int n1 = 1; n1 <= 9; ++n1) {
    for (int n2 = 3; n2 <= 9; ++n2) check_integer(chi_m1_cross_m0_mod_S2(n1, n2));
  }
}

TEST_CASE("spec dispatch and kind names") {
  QuotientSpec spec{QuotientKind::M0ModSj, {9}, 6};
  CHECK(chi_quotient(spec) == Rational(1));
  CHECK(spec.kind_name() == "m0-mod-sj");
  CHECK(QuotientSpec::kind_from_name("prod3-mod-klein") == QuotientKind::Prod3ModKlein);
  CHECK_FALSE(QuotientSpec::kind_from_name("nope").has_value());

  CHECK(chi_quotient({QuotientKind::M1ModS2, {6}, {}}) == Rational(6));
  CHECK_THROWS_AS(chi_quotient({QuotientKind::M0ModSj, {9}, {}}), std::domain_error);
  CHECK_THROWS_AS(chi_quotient({QuotientKind::Prod2ModS2, {4}, {}}), std::domain_error);
}

TEST_CASE("oracle actions realize the table actions") {
  CHECK(action_for({QuotientKind::M0ModKlein, {6}, {}}).order() == 4);
  CHECK(action_for({QuotientKind::M0ModD4, {6}, {}}).order() == 8);
  CHECK(action_for({QuotientKind::Prod2ModS3, {4, 5}, {}}).order() == 6);
  CHECK(action_for({QuotientKind::Prod2ModKlein, {4, 5}, {}}).order() == 4);
  CHECK(action_for({QuotientKind::Prod3ModKlein, {4, 4, 4}, {}}).order() == 4);
  CHECK(action_for({QuotientKind::M0ModSj, {7}, 4}).order() == 24);
  CHECK_THROWS_AS(action_for({QuotientKind::M1ModS2, {4}, {}}), std::domain_error);
  CHECK_THROWS_AS(action_for({QuotientKind::M1CrossM0ModS2, {2, 4}, {}}), std::domain_error);
}

TEST_CASE("a few oracle cross-checks inline") {
  CHECK(burnside_quotient_chi(action_for({QuotientKind::M0ModKlein, {6}, {}})) == Rational(-2));
  CHECK(burnside_quotient_chi(action_for({QuotientKind::M0ModD4, {6}, {}})) == Rational(-1));
  CHECK(burnside_quotient_chi(action_for({QuotientKind::Prod2ModS3, {4, 4}, {}})) == Rational(2));
  CHECK(burnside_quotient_chi(action_for({QuotientKind::Prod3ModKlein, {4, 4, 5}, {}})) ==
        Rational(0));
}
