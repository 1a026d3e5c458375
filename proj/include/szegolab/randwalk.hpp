#pragma once
// Exact verification of the bivariate characteristic-function formula for
// the pair (S_p, T_{p+q}) of a discrete random walk, where S_p is the p-th
// partial sum and T_{p+q} = max(0, S_1, ..., S_{p+q}) the running maximum.
//
// The identity is checked coefficient-by-coefficient in the generating
// variables: the left side is the exact expectation by exhaustive path
// enumeration, the right side the composition/block formula with harmonic
// weights and the two-block max-functional omega_rw.  Block laws are exact
// discrete convolutions, so both sides are exact up to rounding.

#include <complex>
#include <string>
#include <vector>

namespace szegolab::rwalk {

using Cplx = std::complex<double>;

// Finitely supported step distribution.
struct StepDist {
  std::vector<double> support;
  std::vector<double> probs;

  // Throws unless sizes match, probs are nonnegative, and sum to 1 within
  // 1e-12.
  void validate() const;

  // JSON round-trip: {"support": [...], "probs": [...]}.
  std::string to_json() const;
  static StepDist from_json(const std::string& text);
};

// One grid point of the verification sweep.
struct WalkMoment {
  int p = 1;
  int q = 1;
  double alpha = 0.0;
  double beta = 0.0;
  Cplx value{0.0, 0.0};  // |value| <= 1
};

// E[e^{i alpha S_p + i beta T_{p+q}}] by exhaustive enumeration of the
// |support|^{p+q} paths; throws if that exceeds the budget.
Cplx enumerate_lhs(const StepDist& dist, int p, int q, double alpha, double beta,
                   long budget = 10'000'000);

// The (a^p b^q)-coefficient of the closed-form right-hand side:
//   sum_{j<=p, k<=q} 1/(j! k!)
//     sum_{p-compositions (p_1..p_j), q-compositions (q_1..q_k)}
//       prod 1/p_i prod 1/q_i
//       E[e^{i alpha (Y_1+..+Y_j) + i beta omega_rw(Y, Z)}]
// with independent blocks Y_i ~ dist^{*p_i}, Z_i ~ dist^{*q_i} computed by
// exact convolution.  Throws if the joint block support exceeds the budget.
Cplx formula_rhs_coeff(const StepDist& dist, int p, int q, double alpha, double beta,
                       long budget = 10'000'000);

}  // namespace szegolab::rwalk
