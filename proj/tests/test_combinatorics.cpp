// Exhaustive-enumeration identities over S_m: running extrema, the
// generalized Hunt-Dyson identity, and the Bohnenblust-Spitzer cycle
// average.  Frozen values are hand computations; the identity sweeps use
// seeded random vectors so failures are reproducible.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>

#include "szegolab/combinatorics.hpp"

using namespace szegolab;
using comb::Extremum;
using comb::Vec;

namespace {

double rel_err(double a, double b) {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) / scale;
}

Vec random_vec(std::mt19937& rng, int m) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  Vec v(m);
  for (double& x : v) x = u(rng);
  return v;
}

}  // namespace

TEST_CASE("factorial and multinomial basics") {
  CHECK(comb::factorial(0) == 1.0);
  CHECK(comb::factorial(5) == 120.0);
  CHECK(comb::multinomial(3, {1, 2}) == 3.0);
  CHECK(comb::multinomial(4, {2, 2}) == 6.0);
  CHECK(comb::multinomial(6, {1, 2, 3}) == 60.0);
}

TEST_CASE("compositions enumerate ordered positive parts") {
  const auto c42 = comb::compositions(4, 2);
  REQUIRE(c42.size() == 3);
  CHECK(c42[0] == comb::Composition{1, 3});
  CHECK(c42[1] == comb::Composition{2, 2});
  CHECK(c42[2] == comb::Composition{3, 1});
  CHECK(comb::compositions(3, 5).empty());
  // 2^{m-1} compositions of m in total.
  CHECK(comb::all_compositions(3).size() == 4);
  CHECK(comb::all_compositions(6).size() == 32);
}

TEST_CASE("block sums of permuted vectors") {
  const Vec v{1.0, 2.0, 3.0};
  const std::vector<int> id{0, 1, 2};
  CHECK(comb::block_sums(v, {3}, id) == std::vector<double>{6.0});
  CHECK(comb::block_sums(v, {1, 2}, id) == std::vector<double>{1.0, 5.0});
  // Permutation (3,1,2) of the values, blocks of sizes (2,1).
  CHECK(comb::block_sums(v, {2, 1}, {2, 0, 1}) == std::vector<double>{4.0, 2.0});
  CHECK_THROWS_AS(comb::block_sums(v, {1, 1}, id), std::invalid_argument);
  CHECK_THROWS_AS(comb::block_sums(v, {0, 3}, id), std::invalid_argument);
  CHECK_THROWS_AS(comb::block_sums(v, {3}, {0, 1}), std::invalid_argument);
}

TEST_CASE("running extremum of partial-sum walks") {
  CHECK(comb::running_extremum({0.0, 0.0, 0.0}) == 0.0);
  CHECK(comb::running_extremum({1.0, -2.0, 3.0}) == -1.0);
  CHECK(comb::running_extremum({-1.0, -1.0}) == -2.0);
  // Max mode mirrors Min mode on the negated vector.
  std::mt19937 rng(11);
  for (int t = 0; t < 100; ++t) {
    Vec v = random_vec(rng, 1 + t % 6);
    Vec neg = v;
    for (double& x : neg) x = -x;
    CHECK(comb::running_extremum(v, Extremum::Max) ==
          -comb::running_extremum(neg, Extremum::Min));
  }
}

TEST_CASE("generalized Hunt-Dyson: frozen left-side values") {
  CHECK(comb::ghd_lhs({1.0, -2.0}, 1) == doctest::Approx(-1.0));
  CHECK(comb::ghd_lhs({-1.0, -1.0}, 2) == doctest::Approx(6.0));
  CHECK(comb::ghd_lhs({0.0, 0.0}, 3) == doctest::Approx(0.0));
}

TEST_CASE("generalized Hunt-Dyson: frozen right-side values") {
  CHECK(comb::ghd_rhs({1.0, -2.0}, 1) == doctest::Approx(-1.0));
  CHECK(comb::ghd_rhs({-1.0, -1.0}, 2) == doctest::Approx(6.0));
  CHECK(comb::ghd_rhs({0.0, 0.0}, 3) == doctest::Approx(0.0));
  // All-positive vectors clip every block to zero.
  CHECK(comb::ghd_rhs({5.0, 7.0}, 2) == doctest::Approx(0.0));
}

TEST_CASE("generalized Hunt-Dyson identity on random vectors") {
  std::mt19937 rng(17);
  for (int m = 1; m <= 5; ++m) {
    for (int n = 1; n <= 4; ++n) {
      for (int t = 0; t < 25; ++t) {
        const Vec v = random_vec(rng, m);
        const double lhs = comb::ghd_lhs(v, n);
        const double rhs = comb::ghd_rhs(v, n);
        CHECK(rel_err(lhs, rhs) < 1e-9);
      }
    }
  }
}

TEST_CASE("generalized Hunt-Dyson identity in Max mode") {
  std::mt19937 rng(19);
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= 3; ++n) {
      for (int t = 0; t < 20; ++t) {
        const Vec v = random_vec(rng, m);
        CHECK(rel_err(comb::ghd_lhs(v, n, Extremum::Max),
                      comb::ghd_rhs(v, n, Extremum::Max)) < 1e-9);
      }
    }
  }
}

TEST_CASE("both Hunt-Dyson sides are symmetric in the input") {
  std::mt19937 rng(23);
  for (int t = 0; t < 20; ++t) {
    Vec v = random_vec(rng, 4);
    Vec w = v;
    std::shuffle(w.begin(), w.end(), rng);
    CHECK(comb::ghd_lhs(v, 2) == doctest::Approx(comb::ghd_lhs(w, 2)));
    CHECK(comb::ghd_rhs(v, 2) == doctest::Approx(comb::ghd_rhs(w, 2)));
  }
}

TEST_CASE("classical Hunt-Dyson right side") {
  CHECK(comb::hd_classic_rhs({1.0, -2.0}) == doctest::Approx(-1.0));
  CHECK(comb::hd_classic_rhs({3.0, 4.0}) == doctest::Approx(0.0));
  // (m-1)! * min(0, sum) = 2 * (-10).
  CHECK(comb::hd_classic_rhs({-2.0, -3.0, -5.0}) == doctest::Approx(-20.0));
  // n = 1 specializes the generalized identity to the classical one.
  std::mt19937 rng(29);
  for (int m = 1; m <= 5; ++m) {
    for (int t = 0; t < 20; ++t) {
      const Vec v = random_vec(rng, m);
      CHECK(rel_err(comb::ghd_rhs(v, 1), comb::hd_classic_rhs(v)) < 1e-12);
      CHECK(rel_err(comb::ghd_lhs(v, 1), comb::hd_classic_rhs(v)) < 1e-12);
    }
  }
}

TEST_CASE("cyclic average already telescopes to min(0, sum)") {
  std::mt19937 rng(31);
  for (int m = 1; m <= 7; ++m) {
    for (int t = 0; t < 20; ++t) {
      const Vec v = random_vec(rng, m);
      double s = 0.0;
      for (double x : v) s += x;
      CHECK(rel_err(comb::hd_cyclic_lhs(v), std::min(0.0, s)) < 1e-12);
    }
  }
}

TEST_CASE("cycle average (Bohnenblust-Spitzer): frozen values") {
  const auto id = [](double x) { return x; };
  const auto lin = comb::cf_bst_both_sides({1.0, -2.0}, id);
  CHECK(lin.lhs == doctest::Approx(-3.0));
  CHECK(lin.rhs == doctest::Approx(-3.0));
  // Zero walk: both sides count 3! * f(0); composition weights sum to 1.
  const auto zero = comb::cf_bst_both_sides({0.0, 0.0, 0.0}, [](double) { return 7.5; });
  CHECK(zero.lhs == doctest::Approx(6.0 * 7.5));
  CHECK(zero.rhs == doctest::Approx(6.0 * 7.5));
  const auto sq = comb::cf_bst_both_sides({2.0, -1.0, -3.0}, [](double x) { return x * x; });
  CHECK(rel_err(sq.lhs, sq.rhs) < 1e-12);
}

TEST_CASE("cycle average identity for the four test functions") {
  const std::vector<std::function<double(double)>> fns = {
      [](double x) { return x; },
      [](double x) { return x * x; },
      [](double x) { return x * x * x; },
      [](double x) { return std::exp(x); },
  };
  std::mt19937 rng(37);
  for (int m = 1; m <= 5; ++m) {
    for (const auto& f : fns) {
      for (int t = 0; t < 15; ++t) {
        const Vec v = random_vec(rng, m);
        const auto sides = comb::cf_bst_both_sides(v, f);
        CHECK(rel_err(sides.lhs, sides.rhs) < 1e-9);
      }
    }
  }
}

TEST_CASE("cycle average identity in Max mode") {
  std::mt19937 rng(41);
  for (int t = 0; t < 30; ++t) {
    const Vec v = random_vec(rng, 4);
    const auto sides =
        comb::cf_bst_both_sides(v, [](double x) { return x * x; }, Extremum::Max);
    CHECK(rel_err(sides.lhs, sides.rhs) < 1e-9);
  }
}

TEST_CASE("size guards") {
  CHECK_THROWS_AS(comb::ghd_lhs({}, 1), std::invalid_argument);
  CHECK_THROWS_AS(comb::ghd_rhs({}, 1), std::invalid_argument);
  CHECK_THROWS_AS(comb::hd_classic_rhs({}), std::invalid_argument);
  const Vec too_long(10, 1.0);
  CHECK_THROWS_AS(comb::ghd_lhs(too_long, 1), std::invalid_argument);
  CHECK_THROWS_AS(
      comb::cf_bst_both_sides(too_long, [](double x) { return x; }),
      std::invalid_argument);
}
