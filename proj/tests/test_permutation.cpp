#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "moduli/permutation.hpp"

using moduli::GroupElement;
using moduli::MarkedPermutation;
using moduli::PermutationGroupAction;

TEST_CASE("construction and validation") {
  auto id = MarkedPermutation::identity(5);
  CHECK(id.is_identity());
  CHECK(id.cycle_type() == std::vector<int>{1, 1, 1, 1, 1});

  auto s = MarkedPermutation::from_images({2, 1, 3, 4});
  CHECK(s.image(1) == 2);
  CHECK(s.image(2) == 1);
  CHECK(s.cycle_type() == std::vector<int>{1, 1, 2});

  CHECK_THROWS_AS(MarkedPermutation::from_images({1, 1, 3}), std::domain_error);
  CHECK_THROWS_AS(MarkedPermutation::from_images({0, 1}), std::domain_error);
  CHECK_THROWS_AS(MarkedPermutation::transposition(4, 2, 2), std::domain_error);
}

TEST_CASE("cycles, composition, inverse") {
  auto c = MarkedPermutation::from_cycles(6, {{1, 2}, {3, 4, 5}});
  CHECK(c.cycle_type() == std::vector<int>{1, 2, 3});
  CHECK(c.image(3) == 4);
  CHECK(c.image(5) == 3);
  CHECK(c.str() == "(1 2)(3 4 5)");
  CHECK((c * c.inverse()).is_identity());

  auto a = MarkedPermutation::transposition(4, 1, 2);
  auto b = MarkedPermutation::transposition(4, 2, 3);
  auto ab = a * b;  // apply b first
  CHECK(ab.image(2) == 3);
  CHECK(ab.image(3) == 1);
  CHECK(ab.cycle_type() == std::vector<int>{1, 3});
}

TEST_CASE("closure completion") {
  int n = 6;
  auto klein = PermutationGroupAction::from_generators(
      {n}, {{MarkedPermutation::transposition(n, 3, 4)},
            {MarkedPermutation::transposition(n, 5, 6)}});
  CHECK(klein.order() == 4);
  CHECK(klein.is_group());

  auto d4 = PermutationGroupAction::from_generators(
      {4}, {{MarkedPermutation::transposition(4, 1, 2)},
            {MarkedPermutation::from_cycles(4, {{1, 3}, {2, 4}})}});
  CHECK(d4.order() == 8);
  CHECK(d4.is_group());

  // diagonal S3 on two factors
  auto diag = PermutationGroupAction::from_generators(
      {4, 5}, {{MarkedPermutation::transposition(4, 3, 4),
                MarkedPermutation::transposition(5, 4, 5)},
               {MarkedPermutation::from_cycles(4, {{2, 3, 4}}),
                MarkedPermutation::from_cycles(5, {{3, 4, 5}})}});
  CHECK(diag.order() == 6);
  CHECK(diag.is_group());

  CHECK_THROWS_AS(PermutationGroupAction::from_generators(
                      {4, 4}, {{MarkedPermutation::identity(4)}}),
                  std::domain_error);
}

TEST_CASE("full symmetric group on the last j markings") {
  auto s3 = PermutationGroupAction::symmetric_on_last(5, 3);
  CHECK(s3.order() == 6);
  CHECK(s3.is_group());
  for (const auto& element : s3.elements()) {
    CHECK(element[0].image(1) == 1);
    CHECK(element[0].image(2) == 2);
  }
  CHECK(PermutationGroupAction::symmetric_on_last(7, 0).order() == 1);
  CHECK(PermutationGroupAction::symmetric_on_last(8, 8).order() == 40320);
  CHECK_THROWS_AS(PermutationGroupAction::symmetric_on_last(3, 4), std::domain_error);
}

TEST_CASE("trivial group") {
  auto g = PermutationGroupAction::trivial({4, 6});
  CHECK(g.order() == 1);
  CHECK(g.factor_sizes() == std::vector<int>{4, 6});
  CHECK(g.is_group());
}
