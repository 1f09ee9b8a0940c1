#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "torus/arith.hpp"

using namespace torus::arith;

TEST_CASE("two_adic_split basics") {
  auto s = two_adic_split(1);
  CHECK(s.p == 0);
  CHECK(s.odd_part == 1);

  s = two_adic_split(4);
  CHECK(s.p == 2);
  CHECK(s.odd_part == 1);

  s = two_adic_split(12);
  CHECK(s.p == 2);
  CHECK(s.odd_part == 3);

  CHECK_THROWS_AS(two_adic_split(0), std::invalid_argument);
}

TEST_CASE("two_adic_split reconstructs") {
  for (std::int64_t n = 1; n <= 100000; ++n) {
    auto s = two_adic_split(n);
    CHECK(s.odd_part % 2 == 1);
    CHECK((std::int64_t{1} << s.p) * s.odd_part == n);
  }
}

TEST_CASE("representations examples") {
  QuadraticForm unit{1, 1};
  auto reps = representations(unit, 25);
  REQUIRE(reps.size() == 4);
  CHECK(reps[0] == Representation{0, 5});
  CHECK(reps[1] == Representation{3, 4});
  CHECK(reps[2] == Representation{4, 3});
  CHECK(reps[3] == Representation{5, 0});

  CHECK(representations(unit, 3).empty());
  auto two = representations(unit, 2);
  REQUIRE(two.size() == 1);
  CHECK(two[0] == Representation{1, 1});
}

TEST_CASE("representations is exhaustive") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> pick(1, 5000);
  QuadraticForm form{1, 5};
  for (int trial = 0; trial < 50; ++trial) {
    std::int64_t lambda = pick(rng);
    auto reps = representations(form, lambda);
    std::size_t brute = 0;
    for (std::int64_t m = 0; m * m <= lambda; ++m) {
      for (std::int64_t n = 0; m * m + 5 * n * n <= lambda; ++n) {
        if (m * m + 5 * n * n == lambda) {
          ++brute;
          CHECK(std::find(reps.begin(), reps.end(), Representation{m, n}) != reps.end());
        }
      }
    }
    CHECK(reps.size() == brute);
  }
}

TEST_CASE("decompose examples") {
  auto w = decompose(3, 4);
  CHECK(w.p == 0);
  CHECK(w.m0 == 3);
  CHECK(w.n0 == 4);
  CHECK(w.parity_case == ParityCase::ExactlyOneOdd);

  w = decompose(1, 1);
  CHECK(w.p == 0);
  CHECK(w.m0 == 1);
  CHECK(w.n0 == 1);
  CHECK(w.parity_case == ParityCase::BothOdd);

  w = decompose(2, 0);
  CHECK(w.p == 1);
  CHECK(w.m0 == 1);
  CHECK(w.n0 == 0);
  CHECK(w.parity_case == ParityCase::ExactlyOneOdd);

  CHECK_THROWS_AS(decompose(0, 0), std::invalid_argument);
}

TEST_CASE("decompose exhaustive to 1e4") {
  for (std::int64_t m = 0; m * m <= 10000; ++m) {
    for (std::int64_t n = (m == 0 ? 1 : 0); m * m + n * n <= 10000; ++n) {
      auto w = decompose(m, n);
      std::int64_t scale = std::int64_t{1} << w.p;
      CHECK(m == scale * w.m0);
      CHECK(n == scale * w.n0);
    }
  }
}

TEST_CASE("verify_generalized_lemma") {
  auto report = verify_generalized_lemma({1, 1}, 1000);
  CHECK(report.ok());
  CHECK(report.representations_checked > 0);

  report = verify_generalized_lemma({1, 5}, 1000);
  CHECK(report.ok());

  CHECK_THROWS_AS(verify_generalized_lemma({1, 3}, 10), std::invalid_argument);
  CHECK_THROWS_AS(verify_generalized_lemma({2, 4}, 10), std::invalid_argument);
  CHECK_THROWS_AS(verify_generalized_lemma({1, 1}, 0), std::invalid_argument);
}

TEST_CASE("form validity") {
  CHECK(QuadraticForm{1, 1}.valid());
  CHECK(QuadraticForm{1, 5}.valid());
  CHECK(QuadraticForm{3, 7}.valid());
  CHECK_FALSE(QuadraticForm{1, 3}.valid());
  CHECK_FALSE(QuadraticForm{2, 4}.valid());
  CHECK_FALSE(QuadraticForm{1, 7}.valid());
}
