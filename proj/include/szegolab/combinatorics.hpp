#pragma once
// Permutation-averaged extremal identities for partial sums.
//
// For a vector kappa = (k_1,...,k_m) and a permutation tau, let
//   M_m(kappa_tau) = min(0, k_{tau(1)}, k_{tau(1)}+k_{tau(2)}, ...)
// be the running minimum of the partial-sum walk (0 included).  This module
// checks, by exhaustive enumeration over S_m, the classical Hunt-Dyson
// identity, its generalized power form, and the Bohnenblust-Spitzer /
// cycle-decomposition average that converts permutation sums into sums over
// compositions with harmonic weights.  Everything here is an exact identity
// of rational numbers evaluated in double precision; enumeration is the
// oracle the rest of the project calibrates against.

#include <cstdint>
#include <functional>
#include <vector>

namespace szegolab::comb {

using Vec = std::vector<double>;
using Composition = std::vector<int>;

// Running extrema are checked in Min mode; every statement has a mirrored
// Max mode (minima -> maxima, min(0,x) -> max(0,x)).
enum class Extremum { Min, Max };

// Exhaustive enumeration over S_m is capped: 9! = 362880 permutations.
inline constexpr int kMaxPermutationSize = 9;

double factorial(int n);
double multinomial(int n, const Composition& parts);

// All compositions of m into exactly j positive parts (ordered).
std::vector<Composition> compositions(int m, int j);
// All compositions of m into any number of positive parts.
std::vector<Composition> all_compositions(int m);

// Consecutive block sums of the permuted vector: block i sums the next c[i]
// entries of (v[perm[0]], v[perm[1]], ...).  Throws on length mismatch.
std::vector<double> block_sums(const Vec& v, const Composition& c,
                               const std::vector<int>& perm);

// M_m(v): running min (or max) of partial sums, including the empty sum 0.
double running_extremum(const Vec& v, Extremum mode = Extremum::Min);

// Generalized Hunt-Dyson, left side:
//   sum_{tau in S_m} [ M_m(v_tau)^n - M_{m-1}(v_tau)^n ]
// where M_{m-1} drops the last summand of the permuted vector.
double ghd_lhs(const Vec& v, int n, Extremum mode = Extremum::Min);

// Generalized Hunt-Dyson, right side:
//   sum_{tau} sum_{j=1}^{min(m,n)} (1/j!) sum_{k |= m into j} sum_{l |= n into j}
//     multinomial(n; l) * prod_i  min(0, block_i(tau,k))^{l_i} / k_i
// where block_i is the sum of the i-th consecutive k_i entries of v_tau.
double ghd_rhs(const Vec& v, int n, Extremum mode = Extremum::Min);

// Classical Hunt-Dyson right side: (m-1)! * min(0, sum v)  (signed).
double hd_classic_rhs(const Vec& v, Extremum mode = Extremum::Min);

// Hunt-Dyson averaged over the cyclic subgroup C_m instead of all of S_m:
//   sum_{c in C_m} [ M_m(v_c) - M_{m-1}(v_c) ]  =  min(0, sum v).
double hd_cyclic_lhs(const Vec& v, Extremum mode = Extremum::Min);

// Cycle/composition average (Bohnenblust-Spitzer form).  For arbitrary f:
//   lhs = sum_{tau} f( M_m(v_tau) )
//   rhs = sum_{tau} sum_{j=1}^m (1/j!) sum_{k |= m into j}
//           f( sum_i min(0, block_i(tau,k)) ) / (k_1 ... k_j)
struct CfSides {
  double lhs = 0.0;
  double rhs = 0.0;
};
CfSides cf_bst_both_sides(const Vec& v, const std::function<double(double)>& f,
                          Extremum mode = Extremum::Min);

}  // namespace szegolab::comb
