#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "mtzeta/convergence.hpp"

using namespace mtzeta;

TEST_CASE("nested criterion checks ordered partial sums") {
  CHECK(mzv_convergence_check({rational(2)}));
  CHECK(mzv_convergence_check({rational(2), rational(1)}));
  CHECK(mzv_convergence_check({rational(3, 2), rational(3, 2)}));
  CHECK_FALSE(mzv_convergence_check({rational(1)}));
  CHECK_FALSE(mzv_convergence_check({rational(1), rational(5)}));
  CHECK_FALSE(mzv_convergence_check({rational(3, 2), rational(1, 2)}));
}

TEST_CASE("nested criterion reports the first failing position") {
  CHECK(mzv_criterion_violation({rational(2), rational(1)}) == std::nullopt);
  CHECK(mzv_criterion_violation({rational(1), rational(9)}) == 1);
  // The order-sensitivity example: a zero in the middle sinks position 2
  // even though the total weight is ample.
  CHECK(mzv_criterion_violation({rational(2), rational(0), rational(2)}) == 2);
  CHECK(mzv_criterion_violation({rational(2), rational(2), rational(-1)}) == 3);
  CHECK_THROWS_AS(mzv_criterion_violation({}), std::invalid_argument);
}

TEST_CASE("free-variable criterion sorts before summing") {
  CHECK(mt_convergence_check({rational(1), rational(1)}, rational(1)));
  CHECK_FALSE(mt_convergence_check({rational(0), rational(0)}, rational(3, 2)));
  CHECK(mt_criterion_violation({rational(0), rational(0)}, rational(3, 2)) == 2);
  // Sorting matters: the small exponent is tested first regardless of
  // position.
  CHECK(mt_criterion_violation({rational(3), rational(0)}, rational(1, 2)) ==
        mt_criterion_violation({rational(0), rational(3)}, rational(1, 2)));
  CHECK_THROWS_AS(mt_criterion_violation({}, rational(1)), std::invalid_argument);
}

TEST_CASE("free-variable criterion is permutation invariant") {
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<int> len(1, 6);
  std::uniform_int_distribution<int> num(-3, 6);
  std::uniform_int_distribution<int> den(1, 4);
  for (int i = 0; i < 100; ++i) {
    std::vector<rational> sigmas;
    const int r = len(rng);
    for (int k = 0; k < r; ++k) sigmas.emplace_back(num(rng), den(rng));
    rational last(num(rng), den(rng));
    const bool expected = mt_convergence_check(sigmas, last);
    std::shuffle(sigmas.begin(), sigmas.end(), rng);
    CHECK(mt_convergence_check(sigmas, last) == expected);
  }
}

TEST_CASE("positive integer indices certify as expected") {
  CHECK(converges(mt_index({1, 1, 1}, 1)));
  CHECK(converges(mt_index({5, 1}, 2)));
  CHECK(converges(mzv_index({2, 1, 1})));
  CHECK_FALSE(converges(mzv_index({1, 2})));
}
