#pragma once
// Partial-sum asymptotics for level traces.
//
// Given level traces t_k = Tr(pi_k G) obeying a residue expansion
// t_k ~ sum_l R_l k^{d-1-l}, the partial sums Tr(P_n G) = sum_{k<=n} t_k have
// explicit expansions whose constant terms involve Euler's gamma, zeta
// values, and the regularized constant
//   C(G) = t_0 + sum_{k>=1} eps_k,   eps_k = t_k - sum_l R_l k^{d-1-l}.
// The mode-0 trace is folded into the constant: both predictions and fits
// use this convention consistently, so comparisons are convention-free.

#include <string>
#include <vector>

namespace szegolab::tracesum {

inline constexpr double kEulerGamma = 0.5772156649015328606;

// Riemann zeta(l) for integer l >= 2, accurate to ~1e-15.
double zeta(int l);

struct PowerSumResult {
  double exact;       // sum_{k=1}^{n} k^m
  double predicted;   // the asymptotic prediction
  int remainder_exp;  // remainder is O(n^{remainder_exp})
};

// Partial power sums and their asymptotic predictions:
//   m >= 2:  n^{m+1}/(m+1) + n^m/2 + (m/12) n^{m-1}    (exact for m <= 3)
//   m = 1:   n^2/2 + n/2                               (exact; no 1/12 term)
//   m = 0:   n                                         (exact)
//   m = -1:  log n + gamma + 1/(2n)
//   m = -2:  zeta(2) - 1/n
//   m <= -3: zeta(-m)
PowerSumResult power_sum(long n, int m);

struct TraceSequence {
  std::vector<double> traces;    // t_k for k = 0..K_max
  std::vector<double> residues;  // R_0..R_L (may be empty)
  int d = 1;
};

// eps_k = t_k - sum_l R_l k^{d-1-l} for k >= 1.
double tail_eps(const TraceSequence& ts, int k);

// C = t_0 + sum_{k=1}^{K_max} eps_k, plus a power-law tail estimate from the
// last quarter of the window.  Throws if the tail is not decaying.
double c_constant(const TraceSequence& ts);

// The displayed expansion of Tr(P_n G) for d = 1, 2, >= 3 (through the
// constant term; for d = 1 also the 1/n term).  Remainder orders are
// O(n^-2), O(n^-1), O(n^{d-3}) respectively.
double prop3_predict(const TraceSequence& ts, long n);

// Exact partial sum sum_{k=0}^{n} t_k (requires n <= K_max).
double exact_partial_sum(const TraceSequence& ts, long n);

struct ResidueFit {
  std::vector<double> residues;  // R_0..R_L (prefix copied from `fixed`)
  double condition;              // column-scaled condition number of the design
  double residual_norm;          // max |t_k - model(k)| over the fit window
};

// Least-squares fit of t_k against k^{d-1-l}, l = l_min..L, on a log-spaced
// subset of [k_lo, k_hi] with equal weights.  Residues below l_min are taken
// from `fixed` (exact values from symbol formulas) and subtracted first.
ResidueFit fit_residues(const std::vector<double>& traces, int d, int k_lo, int k_hi,
                        int L, int l_min = 0, const std::vector<double>& fixed = {});

// CSV export: lines "k,trace" with a header.
std::string trace_sequence_to_csv(const TraceSequence& ts);

}  // namespace szegolab::tracesum
