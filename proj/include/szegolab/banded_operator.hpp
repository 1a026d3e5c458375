#pragma once
// The circle operator model: B = T(b0) + T(bsub) * D as a finite matrix over
// Fourier modes -N..N, with level structure level(j) = |j|, spectral
// projections P_n (levels <= n), Fourier blocks B_kappa (entries whose level
// difference is kappa), and exact trace / determinant computations.
//
// Every operation declares an interior budget and refuses (throws) rather
// than silently truncate: all downstream verification relies on the finite
// matrix computations being exact, not approximate.

#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "szegolab/trig_poly.hpp"

namespace szegolab::circ {

class BandedOperator {
 public:
  BandedOperator(int N, int bandwidth);
  BandedOperator(Eigen::MatrixXcd m, int bandwidth);

  int cutoff() const { return N_; }
  int bandwidth() const { return bandwidth_; }
  const Eigen::MatrixXcd& matrix() const { return m_; }
  Eigen::MatrixXcd& matrix() { return m_; }

  // Entries indexed by modes j, k in [-N, N].
  Cplx entry(int j, int k) const { return m_(j + N_, k + N_); }
  void set_entry(int j, int k, Cplx v) { m_(j + N_, k + N_) = v; }

  static int level(int mode) { return mode < 0 ? -mode : mode; }

 private:
  int N_;
  int bandwidth_;
  Eigen::MatrixXcd m_;
};

// Matrix of T(b0) + T(bsub) * D: entry (j,k) = b0_hat(j-k) + bsub_hat(j-k) * d_k
// with d_k = 1/|k| for k != 0 and d_0 = 0.
BandedOperator build_operator(const TrigPoly& b0, const TrigPoly& bsub, int N);

// P_n op P_n: zero all rows/columns with level > n (n < 0 gives the zero
// operator; n must not exceed the cutoff).
BandedOperator project(const BandedOperator& op, int n);

// Dense (2n+1)x(2n+1) compression of P_n op P_n onto the range of P_n.
Eigen::MatrixXcd compress(const BandedOperator& op, int n);

// Fourier block: keep entries (j,k) with level(j) - level(k) = kappa.
BandedOperator fourier_block(const BandedOperator& op, int kappa);

// max-norm of B_kappa P_n - P_{n+kappa} B_kappa (exact commutation; zero).
double commutation_residual(const BandedOperator& op, int kappa, int n);

// max-norm of nu * G_nu - ([A, G])_nu with A = diag(level) (exact; zero).
double ad_a_block_residual(const BandedOperator& op, int nu);

// The nu-block of op^j via the dense matrix power.
BandedOperator power_block(const BandedOperator& op, int j, int nu);
// Same block via the convolution sum over kappa_1 + ... + kappa_j = nu.
BandedOperator power_block_conv(const BandedOperator& op, int j, int nu);

// Signed convolution powers:
//   minus[0] = (B)_-,  minus[j] = (B * minus[j-1])_-,
//   plus[0]  = (B)_+,  plus[j]  = (plus[j-1] * B)_+,
// where (.)- keeps entries with negative level difference and (.)+ keeps
// level difference >= 0 (kappa = 0 belongs to the plus part).
struct PlusMinusFamily {
  std::vector<BandedOperator> minus;  // minus[j-1] = B_-^j
  std::vector<BandedOperator> plus;   // plus[j-1]  = B_+^j
};
PlusMinusFamily plus_minus_parts(const BandedOperator& op, int max_power);

// Tr((P_n B P_n)^m) and Tr(P_n B^m P_n); requires n + m*bandwidth <= N so the
// windowed power is exact.
struct TracePair {
  Cplx compressed;  // Tr((P_n B P_n)^m)
  Cplx windowed;    // Tr(P_n B^m P_n)
};
TracePair trace_pow(const BandedOperator& op, int n, int m);

// Right-hand side of the exact finite-n trace identity:
//   Tr((P_n B P_n)^m) - Tr(P_n B^m P_n)
//     = - sum_{kappa_1+..+kappa_m = 0, |kappa_i| <= bw}
//         sum_{j = M_m(kappa)+1}^{0} Tr( pi_{n+j} B_{kappa_1} ... B_{kappa_m} ),
// with M_m the running minimum of the partial sums and pi_l = 0 for l < 0.
Cplx finite_n_identity_rhs(const BandedOperator& op, int n, int m);

// Tr log(P_n B P_n) on the range of P_n by the Neumann series
// -sum_{m=1}^{M} Tr((I-T)^m)/m, M chosen so r^{M+1}/((M+1)(1-r)) < 1e-12
// where r = ||I-T||_inf; cross-checked against an LU log-determinant.
struct TraceLogResult {
  Cplx series_value;
  Cplx lu_value;
  double contraction;   // r
  int terms_used;
  bool pivot_warning;   // some LU pivot had nonpositive real part
};
TraceLogResult trace_log(const BandedOperator& op, int n, int max_terms = 400);

// log det of a dense matrix by partial-pivot LU (principal branch, argument
// reduced to (-pi, pi]); flags nonpositive-real pivots.
Cplx log_det_lu(const Eigen::MatrixXcd& t, bool* pivot_warning = nullptr);

// log(B) on the full window as a dense matrix, by the same Neumann series.
// Diagonal entries at level k are exact (match the untruncated operator)
// when k + terms_used * bandwidth <= N.
Eigen::MatrixXcd operator_log(const BandedOperator& op, double tol = 1e-12,
                              int max_terms = 400, int* terms_used = nullptr);

// Tr(pi_k X) = X(k,k) + X(-k,-k) for k >= 1, and X(0,0) for k = 0.
Cplx trace_pi(const Eigen::MatrixXcd& x, int N, int k);

}  // namespace szegolab::circ
