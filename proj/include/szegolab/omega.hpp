#pragma once
// Piecewise-linear functionals of integer walks.
//
// The operator-trace expansion on the circle produces nested min/plus
// expressions Omega^(1), Omega^(2), Omega^(3) in two distinguished jumps
// (kappa1, kappa2) and up to three blocks of reduced jumps (mu, nu, rho).
// They are rewrites of running minima M_m = min(0, S_1, ..., S_m) obtained
// by splitting the walk at the distinguished positions; the random-walk
// variant omega_rw plays the same role for maxima in the Spitzer-type
// fluctuation identity.
//
// Transcription is the dominant risk for these formulas, so each Omega is
// implemented twice: once literally (nested neg/pos expression, omega1/2/3)
// and once through a shared block-pattern recursion (omega*_resplit).  Tests
// demand bitwise agreement on exhaustive small inputs.
//
// Sign convention used throughout (fixed by the block-sum reconstruction
// against running minima and by the random-walk enumeration oracle):
//   neg(x) = min(0, x)   and   pos(x) = max(0, x).

#include <cstdint>
#include <vector>

namespace szegolab::omega {

using i64 = std::int64_t;
using IVec = std::vector<i64>;

inline i64 neg(i64 x) { return x < 0 ? x : 0; }
inline i64 pos(i64 x) { return x > 0 ? x : 0; }

// M_2(x,y) = min(0, x, x+y).
i64 m2(i64 x, i64 y);

// M_m(v) = min(0, v1, v1+v2, ..., v1+...+vm).
i64 min_prefix(const IVec& v);

// Argument bundle for the three Omega variants: two distinguished jumps and
// up to three blocks of reduced jumps (block sums of the remaining walk).
struct OmegaArgs {
  i64 kappa1 = 0;
  i64 kappa2 = 0;
  IVec mu;   // arity j  (omega1/2/3)
  IVec nu;   // arity k  (omega2/3)
  IVec rho;  // arity l  (omega3)
};

// Literal transcriptions of the displayed formulas.
i64 omega1(const OmegaArgs& a);  // needs mu nonempty
i64 omega2(const OmegaArgs& a);  // needs mu, nu nonempty
i64 omega3(const OmegaArgs& a);  // needs mu, nu, rho nonempty

// Independent re-derivations through the block-pattern recursion.
i64 omega1_resplit(const OmegaArgs& a);
i64 omega2_resplit(const OmegaArgs& a);
i64 omega3_resplit(const OmegaArgs& a);

// Random-walk functional (maxima convention):
//   omega_rw(y, z) = sum_i pos(y_i) + pos( sum_i neg(y_i) + sum_i pos(z_i) ).
// At j = k = 1 this equals max(0, y, y+z), the running maximum of the
// two-step walk, which is what the fluctuation identity requires.
double omega_rw(const std::vector<double>& y, const std::vector<double>& z);

// Exact two-block split of the running minimum (1 <= j <= p-1):
//   M_p(mu) = M_j(mu_1..mu_j)
//           + neg( sum_{i<=j} mu_i - M_j + M_{p-j}(mu_{j+1}..mu_p) ).
// Returns {literal M_p, right-hand side}; they agree identically.
struct SplitSides {
  i64 lhs = 0;
  i64 rhs = 0;
};
SplitSides split_one(const IVec& mu, int j);

// Exact three-piece split isolating the entry after the cut (1 <= j <= p-2):
//   M_p(mu) = M_j(mu_1..mu_j)
//           + neg( sum_{i<=j} mu_i - M_j + mu_{j+1} + M_{p-j-1}(mu_{j+2}..) ).
SplitSides split_two(const IVec& mu, int j);

}  // namespace szegolab::omega
