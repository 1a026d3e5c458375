// Bivariate characteristic function of (partial sum, running maximum):
// exhaustive enumeration against the composition/block formula, plus the
// degenerate reductions that have closed forms.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "szegolab/randwalk.hpp"

using namespace szegolab;
using rwalk::Cplx;
using rwalk::StepDist;

namespace {

const StepDist kCoin{{1.0, -1.0}, {0.5, 0.5}};
const StepDist kSkewed{{-1.0, 0.0, 2.0}, {0.5, 0.3, 0.2}};
const StepDist kIrrational{{-0.5, 1.3}, {0.6, 0.4}};

Cplx char_fn(const StepDist& d, double alpha) {
  Cplx s{0.0, 0.0};
  for (std::size_t i = 0; i < d.support.size(); ++i)
    s += d.probs[i] * std::exp(Cplx{0.0, alpha * d.support[i]});
  return s;
}

}  // namespace

TEST_CASE("step distribution validation and JSON round-trip") {
  kCoin.validate();
  kSkewed.validate();

  StepDist bad1{{1.0, -1.0}, {0.5}};
  CHECK_THROWS_AS(bad1.validate(), std::invalid_argument);
  StepDist bad2{{1.0, -1.0}, {1.5, -0.5}};
  CHECK_THROWS_AS(bad2.validate(), std::invalid_argument);
  StepDist bad3{{1.0, -1.0}, {0.5, 0.6}};
  CHECK_THROWS_AS(bad3.validate(), std::invalid_argument);

  const StepDist back = StepDist::from_json(kSkewed.to_json());
  REQUIRE(back.support.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(back.support[i] == kSkewed.support[i]);
    CHECK(back.probs[i] == kSkewed.probs[i]);
  }
}

TEST_CASE("enumeration: hand values for the fair +-1 walk") {
  // beta = 0, alpha = 0: expectation of 1.
  CHECK(std::abs(rwalk::enumerate_lhs(kCoin, 1, 1, 0.0, 0.0) - Cplx{1.0, 0.0}) < 1e-15);
  // alpha = 0, beta = pi: T_2 in {0, 1, 2} with probs 1/2, 1/4, 1/4,
  // so E e^{i pi T_2} = 1/2 - 1/4 + 1/4 = 1/2.
  const double pi = std::acos(-1.0);
  CHECK(std::abs(rwalk::enumerate_lhs(kCoin, 1, 1, 0.0, pi) - Cplx{0.5, 0.0}) < 1e-14);
  // beta = 0, alpha = pi: S_2 is even, so e^{i pi S_2} = 1 on every path.
  CHECK(std::abs(rwalk::enumerate_lhs(kCoin, 2, 1, pi, 0.0) - Cplx{1.0, 0.0}) < 1e-14);
}

TEST_CASE("enumeration: beta = 0 reduces to the p-th power of the step law") {
  for (const StepDist& d : {kCoin, kSkewed, kIrrational}) {
    for (int p : {1, 2, 3}) {
      for (double alpha : {-1.0, 0.4, 2.0}) {
        const Cplx lhs = rwalk::enumerate_lhs(d, p, 2, alpha, 0.0);
        const Cplx powered = std::pow(char_fn(d, alpha), p);
        CHECK(std::abs(lhs - powered) < 1e-13);
      }
    }
  }
}

TEST_CASE("formula matches enumeration on a parameter grid") {
  const std::vector<double> angles{-1.7, -0.6, 0.0, 0.9, 2.3};
  for (const StepDist& d : {kCoin, kSkewed}) {
    for (int p = 1; p <= 3; ++p) {
      for (int q = 1; q <= 4 - p; ++q) {
        for (double alpha : angles) {
          for (double beta : angles) {
            const Cplx lhs = rwalk::enumerate_lhs(d, p, q, alpha, beta);
            const Cplx rhs = rwalk::formula_rhs_coeff(d, p, q, alpha, beta);
            CHECK(std::abs(lhs) <= 1.0 + 1e-12);
            CHECK(std::abs(lhs - rhs) < 1e-10);
          }
        }
      }
    }
  }
}

TEST_CASE("formula matches enumeration for non-lattice steps") {
  for (double alpha : {-0.8, 1.1}) {
    for (double beta : {0.5, 2.0}) {
      const Cplx lhs = rwalk::enumerate_lhs(kIrrational, 2, 2, alpha, beta);
      const Cplx rhs = rwalk::formula_rhs_coeff(kIrrational, 2, 2, alpha, beta);
      CHECK(std::abs(lhs - rhs) < 1e-10);
    }
  }
}

TEST_CASE("conjugation symmetry in the angle pair") {
  for (const StepDist& d : {kCoin, kSkewed}) {
    const Cplx v = rwalk::formula_rhs_coeff(d, 2, 2, 0.7, 1.9);
    const Cplx w = rwalk::formula_rhs_coeff(d, 2, 2, -0.7, -1.9);
    CHECK(std::abs(v - std::conj(w)) < 1e-12);
  }
}

TEST_CASE("argument and budget guards") {
  CHECK_THROWS_AS(rwalk::enumerate_lhs(kCoin, 0, 1, 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(rwalk::enumerate_lhs(kCoin, 1, 0, 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(rwalk::formula_rhs_coeff(kCoin, 0, 1, 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(rwalk::enumerate_lhs(kSkewed, 4, 4, 0.1, 0.1, 100), std::invalid_argument);
  CHECK_THROWS_AS(rwalk::formula_rhs_coeff(kSkewed, 4, 4, 0.1, 0.1, 10),
                  std::invalid_argument);
  StepDist bad{{1.0}, {0.7}};
  CHECK_THROWS_AS(rwalk::enumerate_lhs(bad, 1, 1, 0.0, 0.0), std::invalid_argument);
}
