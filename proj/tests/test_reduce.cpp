#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>
#include <vector>

#include "mtzeta/convergence.hpp"
#include "mtzeta/partial_fraction.hpp"
#include "mtzeta/reduce.hpp"

using namespace mtzeta;

TEST_CASE("expand_mt turns the free sum into one-level-down sums") {
  CHECK(expand_mt(mt_index({1, 1}, 1)) ==
        tl_combination{{tl_index({1, 2}, 1), rational(2)}});
  CHECK(expand_mt(mt_index({1, 1, 1}, 2)) ==
        tl_combination{{tl_index({1, 1, 3}, 2), rational(3)}});
  CHECK_THROWS_AS(expand_mt(mt_index({3}, 2)), std::invalid_argument);
}

TEST_CASE("lower_level expands the free block against its own total") {
  CHECK(lower_level(tl_index({1, 1, 3}, 2)) ==
        tl_combination{{tl_index({1, 1, 3}, 1), rational(2)}});
  CHECK(lower_level(tl_index({2, 1, 2}, 2)) ==
        tl_combination{{tl_index({1, 2, 2}, 1), rational(2)},
                       {tl_index({2, 1, 2}, 1), rational(1)}});
  CHECK_THROWS_AS(lower_level(tl_index({1, 2}, 1)), std::invalid_argument);
}

TEST_CASE("level one sums are reversed nested sums") {
  CHECK(level_one_mzv(tl_index({1, 2}, 1)) == mzv_index({2, 1}));
  CHECK(level_one_mzv(tl_index({1, 1, 3}, 1)) == mzv_index({3, 1, 1}));
  CHECK_THROWS_AS(level_one_mzv(tl_index({1, 1, 3}, 2)), std::invalid_argument);
}

TEST_CASE("reduce reproduces hand-verified small cases") {
  CHECK(reduce(mt_index({1, 1}, 1)) ==
        mzv_combination{{mzv_index({2, 1}), rational(2)}});
  CHECK(reduce(mt_index({1}, 4)) == mzv_combination{{mzv_index({5}), rational(1)}});
  CHECK(reduce(mt_index({1, 1, 1}, 2)) ==
        mzv_combination{{mzv_index({3, 1, 1}), rational(6)}});
  CHECK(reduce(mt_index({2, 1}, 2)) ==
        mzv_combination{{mzv_index({4, 1}), rational(2)},
                        {mzv_index({3, 2}), rational(1)}});
  CHECK(reduce(mt_index({2, 2}, 3)) ==
        mzv_combination{{mzv_index({5, 2}), rational(2)},
                        {mzv_index({6, 1}), rational(4)}});
  CHECK(reduce(mt_index({3, 1}, 1)) ==
        mzv_combination{{mzv_index({4, 1}), rational(2)},
                        {mzv_index({2, 3}), rational(1)},
                        {mzv_index({3, 2}), rational(1)}});
}

TEST_CASE("reduce handles a depth-3 mixed-exponent value") {
  const mzv_combination expected{
      {mzv_index({3, 2, 3}), rational(1)},  {mzv_index({3, 3, 2}), rational(3)},
      {mzv_index({3, 4, 1}), rational(6)},  {mzv_index({4, 2, 2}), rational(4)},
      {mzv_index({4, 3, 1}), rational(8)},  {mzv_index({5, 2, 1}), rational(12)},
      {mzv_index({5, 1, 2}), rational(6)},  {mzv_index({4, 1, 3}), rational(2)},
      {mzv_index({6, 1, 1}), rational(18)}};
  CHECK(reduce(mt_index({1, 2, 3}, 2)) == expected);
}

TEST_CASE("all-ones values collapse to a single factorial term") {
  CHECK(all_ones_reduction(2, 1) ==
        mzv_combination{{mzv_index({2, 1}), rational(2)}});
  CHECK(all_ones_reduction(1, 3) == mzv_combination{{mzv_index({4}), rational(1)}});
  CHECK(all_ones_reduction(4, 2) ==
        mzv_combination{{mzv_index({3, 1, 1, 1}), rational(24)}});
  CHECK_THROWS_AS(all_ones_reduction(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(all_ones_reduction(2, 0), std::invalid_argument);
}

TEST_CASE("reduce agrees with the all-ones closed form") {
  for (int r = 1; r <= 4; ++r) {
    for (int s = 1; s <= 3; ++s) {
      CHECK(reduce(mt_index(std::vector<int>(r, 1), s)) == all_ones_reduction(r, s));
    }
  }
}

TEST_CASE("zeta_product expands pairwise products") {
  CHECK(zeta_product({4}) == mzv_combination{{mzv_index({4}), rational(1)}});
  CHECK(zeta_product({2, 2}) ==
        mzv_combination{{mzv_index({2, 2}), rational(2)},
                        {mzv_index({3, 1}), rational(4)}});
  CHECK(zeta_product({2, 3}) ==
        mzv_combination{{mzv_index({2, 3}), rational(1)},
                        {mzv_index({3, 2}), rational(3)},
                        {mzv_index({4, 1}), rational(6)}});
  CHECK(zeta_product({3, 3}) ==
        mzv_combination{{mzv_index({3, 3}), rational(2)},
                        {mzv_index({4, 2}), rational(6)},
                        {mzv_index({5, 1}), rational(12)}});
  CHECK(zeta_product({3, 2}) == zeta_product({2, 3}));
}

TEST_CASE("zeta_product handles a triple product") {
  CHECK(zeta_product({2, 2, 2}) ==
        mzv_combination{{mzv_index({2, 2, 2}), rational(6)},
                        {mzv_index({2, 3, 1}), rational(12)},
                        {mzv_index({3, 2, 1}), rational(24)},
                        {mzv_index({3, 1, 2}), rational(12)},
                        {mzv_index({4, 1, 1}), rational(36)}});
}

TEST_CASE("zeta_product rejects divergent factors") {
  CHECK_THROWS_AS(zeta_product({2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(zeta_product({1}), std::invalid_argument);
  CHECK_THROWS_AS(zeta_product({}), std::invalid_argument);
}

TEST_CASE("pair products match the explicit binomial expansion") {
  // zeta(s) zeta(t) = sum_{a<s} C(a+t-1, t-1) Z(t+a, s-a)
  //                 + sum_{a<t} C(a+s-1, s-1) Z(s+a, t-a),
  // assembled here straight from binomial coefficients as an independent
  // construction of the classical double-zeta decomposition.
  for (int s = 2; s <= 5; ++s) {
    for (int t = 2; t <= 5; ++t) {
      mzv_combination expected;
      for (int a = 0; a < s; ++a) {
        expected.add(mzv_index({t + a, s - a}),
                     rational(multinomial_coefficient(t, {a})));
      }
      for (int a = 0; a < t; ++a) {
        expected.add(mzv_index({s + a, t - a}),
                     rational(multinomial_coefficient(s, {a})));
      }
      CHECK(zeta_product({s, t}) == expected);
    }
  }
}

TEST_CASE("reduction outputs are homogeneous, admissible, integral") {
  const std::vector<mt_index> inputs = {
      mt_index({1, 1}, 1),    mt_index({2, 3}, 1), mt_index({1, 1, 2}, 3),
      mt_index({2, 2, 2}, 2), mt_index({4}, 3),    mt_index({1, 2, 3}, 2)};
  for (const mt_index& t : inputs) {
    const mzv_combination c = reduce(t);
    REQUIRE_FALSE(c.empty());
    CHECK(c.common_weight() == t.weight());
    CHECK(c.common_depth() == t.depth());
    for (const auto& [key, coeff] : c) {
      CHECK(key.admissible());
      CHECK(converges(key));
      CHECK(is_integer(coeff));
      CHECK(coeff > 0);
    }
  }
}

TEST_CASE("opposite_parity matches the weight-depth parity rule") {
  CHECK(opposite_parity(3, 2));        // w + r = 5, odd
  CHECK_FALSE(opposite_parity(4, 2));  // w + r = 6, even
  CHECK(opposite_parity(6, 3));
  CHECK_FALSE(opposite_parity(7, 3));
  CHECK_THROWS_AS(opposite_parity(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(opposite_parity(5, 0), std::invalid_argument);
}
