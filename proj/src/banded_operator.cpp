#include "szegolab/banded_operator.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace szegolab::circ {
namespace {

int dim(int N) { return 2 * N + 1; }

// Smallest M with r^{M+1} / ((M+1)(1-r)) < tol; requires r < 1.
int neumann_terms(double r, double tol, int max_terms) {
  if (r >= 1.0)
    throw std::runtime_error("Neumann series does not converge: contraction >= 1");
  double pow_r = r;  // r^{M+1} at M = 0... incremented below
  for (int M = 1; M <= max_terms; ++M) {
    pow_r *= r;  // r^{M+1}
    if (pow_r / ((M + 1) * (1.0 - r)) < tol) return M;
  }
  throw std::invalid_argument("Neumann series: term budget insufficient for tolerance");
}

double inf_norm(const Eigen::MatrixXcd& m) {
  return m.cwiseAbs().rowwise().sum().maxCoeff();
}

}  // namespace

BandedOperator::BandedOperator(int N, int bandwidth)
    : N_(N), bandwidth_(bandwidth), m_(Eigen::MatrixXcd::Zero(dim(N), dim(N))) {
  if (N < 0 || bandwidth < 0 || bandwidth > 2 * N)
    throw std::invalid_argument("BandedOperator: invalid cutoff/bandwidth");
}

BandedOperator::BandedOperator(Eigen::MatrixXcd m, int bandwidth)
    : N_((static_cast<int>(m.rows()) - 1) / 2), bandwidth_(bandwidth), m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() % 2 == 0)
    throw std::invalid_argument("BandedOperator: matrix must be odd-dimensional square");
}

BandedOperator build_operator(const TrigPoly& b0, const TrigPoly& bsub, int N) {
  const int bw = std::max(b0.degree(), bsub.degree());
  if (N < bw) throw std::invalid_argument("build_operator: cutoff smaller than symbol degree");
  BandedOperator op(N, bw);
  for (int j = -N; j <= N; ++j)
    for (int k = std::max(-N, j - bw); k <= std::min(N, j + bw); ++k) {
      const double dk = k == 0 ? 0.0 : 1.0 / std::abs(k);
      op.set_entry(j, k, b0.coeff(j - k) + bsub.coeff(j - k) * dk);
    }
  return op;
}

BandedOperator project(const BandedOperator& op, int n) {
  if (n > op.cutoff()) throw std::invalid_argument("project: level exceeds cutoff");
  BandedOperator out(op.cutoff(), op.bandwidth());
  if (n < 0) return out;
  const int N = op.cutoff();
  out.matrix().block(N - n, N - n, dim(n), dim(n)) =
      op.matrix().block(N - n, N - n, dim(n), dim(n));
  return out;
}

Eigen::MatrixXcd compress(const BandedOperator& op, int n) {
  if (n < 0 || n > op.cutoff()) throw std::invalid_argument("compress: bad level");
  const int N = op.cutoff();
  return op.matrix().block(N - n, N - n, dim(n), dim(n));
}

BandedOperator fourier_block(const BandedOperator& op, int kappa) {
  const int N = op.cutoff();
  BandedOperator out(N, op.bandwidth());
  for (int j = -N; j <= N; ++j)
    for (int k = -N; k <= N; ++k)
      if (BandedOperator::level(j) - BandedOperator::level(k) == kappa)
        out.set_entry(j, k, op.entry(j, k));
  return out;
}

double commutation_residual(const BandedOperator& op, int kappa, int n) {
  const int N = op.cutoff();
  if (n + std::abs(kappa) + op.bandwidth() > N)
    throw std::invalid_argument("commutation_residual: cutoff too small for exactness");
  const BandedOperator bk = fourier_block(op, kappa);
  Eigen::MatrixXcd lhs = bk.matrix();  // B_kappa P_n: zero columns level > n
  Eigen::MatrixXcd rhs = bk.matrix();  // P_{n+kappa} B_kappa: zero rows level > n+kappa
  for (int mode = -N; mode <= N; ++mode) {
    if (BandedOperator::level(mode) > n) lhs.col(mode + N).setZero();
    if (BandedOperator::level(mode) > n + kappa) rhs.row(mode + N).setZero();
  }
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

double ad_a_block_residual(const BandedOperator& op, int nu) {
  const int N = op.cutoff();
  const BandedOperator gnu = fourier_block(op, nu);
  Eigen::MatrixXcd comm(dim(N), dim(N));
  for (int j = -N; j <= N; ++j)
    for (int k = -N; k <= N; ++k)
      comm(j + N, k + N) =
          static_cast<double>(BandedOperator::level(j) - BandedOperator::level(k)) *
          op.entry(j, k);
  const BandedOperator comm_nu = fourier_block(BandedOperator(std::move(comm), op.bandwidth()), nu);
  return (static_cast<double>(nu) * gnu.matrix() - comm_nu.matrix()).cwiseAbs().maxCoeff();
}

BandedOperator power_block(const BandedOperator& op, int j, int nu) {
  if (j < 1) throw std::invalid_argument("power_block: power must be >= 1");
  if (j * op.bandwidth() > op.cutoff())
    throw std::invalid_argument("power_block: interior budget exceeded");
  Eigen::MatrixXcd p = op.matrix();
  for (int i = 1; i < j; ++i) p = p * op.matrix();
  return fourier_block(BandedOperator(std::move(p), j * op.bandwidth()), nu);
}

BandedOperator power_block_conv(const BandedOperator& op, int j, int nu) {
  if (j < 1) throw std::invalid_argument("power_block_conv: power must be >= 1");
  if (j * op.bandwidth() > op.cutoff())
    throw std::invalid_argument("power_block_conv: interior budget exceeded");
  const int bw = op.bandwidth();
  // blocks[i] holds the level-shift-(i - offset) block of the running product.
  auto block_of = [&](int kappa) { return fourier_block(op, kappa).matrix(); };
  std::vector<Eigen::MatrixXcd> base;
  for (int k = -bw; k <= bw; ++k) base.push_back(block_of(k));

  std::vector<Eigen::MatrixXcd> cur = base;  // shifts -bw .. bw
  int cur_span = bw;
  for (int step = 2; step <= j; ++step) {
    const int span = step * bw;
    std::vector<Eigen::MatrixXcd> next(2 * span + 1,
                                       Eigen::MatrixXcd::Zero(dim(op.cutoff()), dim(op.cutoff())));
    for (int a = -cur_span; a <= cur_span; ++a)
      for (int b = -bw; b <= bw; ++b)
        next[a + b + span] += cur[a + cur_span] * base[b + bw];
    cur = std::move(next);
    cur_span = span;
  }
  if (std::abs(nu) > cur_span)
    return BandedOperator(op.cutoff(), j * bw);
  return BandedOperator(cur[nu + cur_span], j * bw);
}

PlusMinusFamily plus_minus_parts(const BandedOperator& op, int max_power) {
  if (max_power < 1) throw std::invalid_argument("plus_minus_parts: need max_power >= 1");
  if (max_power * op.bandwidth() > op.cutoff())
    throw std::invalid_argument("plus_minus_parts: interior budget exceeded");
  const int N = op.cutoff();
  const auto keep_sign = [N](const Eigen::MatrixXcd& m, bool negative) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(m.rows(), m.cols());
    for (int j = -N; j <= N; ++j)
      for (int k = -N; k <= N; ++k) {
        const int diff = BandedOperator::level(j) - BandedOperator::level(k);
        if ((negative && diff < 0) || (!negative && diff >= 0))
          out(j + N, k + N) = m(j + N, k + N);
      }
    return out;
  };
  PlusMinusFamily fam;
  Eigen::MatrixXcd minus_cur = keep_sign(op.matrix(), true);
  Eigen::MatrixXcd plus_cur = keep_sign(op.matrix(), false);
  fam.minus.emplace_back(minus_cur, op.bandwidth());
  fam.plus.emplace_back(plus_cur, op.bandwidth());
  for (int j = 2; j <= max_power; ++j) {
    minus_cur = keep_sign(op.matrix() * minus_cur, true);
    plus_cur = keep_sign(plus_cur * op.matrix(), false);
    fam.minus.emplace_back(minus_cur, j * op.bandwidth());
    fam.plus.emplace_back(plus_cur, j * op.bandwidth());
  }
  return fam;
}

TracePair trace_pow(const BandedOperator& op, int n, int m) {
  if (m < 1) throw std::invalid_argument("trace_pow: power must be >= 1");
  if (n < 0 || n + m * op.bandwidth() > op.cutoff())
    throw std::invalid_argument("trace_pow: need n + m*bandwidth <= cutoff");
  const Eigen::MatrixXcd t = compress(op, n);
  Eigen::MatrixXcd tp = t;
  for (int i = 1; i < m; ++i) tp = tp * t;
  Eigen::MatrixXcd bp = op.matrix();
  for (int i = 1; i < m; ++i) bp = bp * op.matrix();
  const int N = op.cutoff();
  Cplx windowed{0.0, 0.0};
  for (int mode = -n; mode <= n; ++mode) windowed += bp(mode + N, mode + N);
  return {tp.trace(), windowed};
}

Cplx finite_n_identity_rhs(const BandedOperator& op, int n, int m) {
  if (m < 1) throw std::invalid_argument("finite_n_identity_rhs: power must be >= 1");
  if (n < 0 || n + m * op.bandwidth() > op.cutoff())
    throw std::invalid_argument("finite_n_identity_rhs: need n + m*bandwidth <= cutoff");
  const int bw = op.bandwidth();
  const int N = op.cutoff();
  std::vector<Eigen::MatrixXcd> blocks;  // B_kappa for kappa = -bw..bw
  for (int k = -bw; k <= bw; ++k) blocks.push_back(fourier_block(op, k).matrix());

  Cplx total{0.0, 0.0};
  // Odometer over (kappa_1, ..., kappa_{m-1}); kappa_m closes the sum to 0.
  std::vector<int> kap(m, -bw);
  const int free_count = m - 1;
  while (true) {
    int s = 0;
    for (int i = 0; i < free_count; ++i) s += kap[i];
    const int last = -s;
    if (std::abs(last) <= bw) {
      kap[m - 1] = last;
      int run = 0, mmin = 0;
      for (int i = 0; i < m; ++i) {
        run += kap[i];
        mmin = std::min(mmin, run);
      }
      if (mmin < 0) {
        Eigen::MatrixXcd prod = blocks[kap[0] + bw];
        for (int i = 1; i < m; ++i) prod = prod * blocks[kap[i] + bw];
        for (int j = mmin + 1; j <= 0; ++j) {
          const int lev = n + j;
          if (lev < 0) continue;
          total += trace_pi(prod, N, lev);
        }
      }
    }
    // Advance the odometer.
    int pos = 0;
    while (pos < free_count && kap[pos] == bw) kap[pos++] = -bw;
    if (pos == free_count) break;
    if (free_count == 0) break;
    ++kap[pos];
  }
  return -total;
}

Cplx log_det_lu(const Eigen::MatrixXcd& t, bool* pivot_warning) {
  const Eigen::PartialPivLU<Eigen::MatrixXcd> lu(t);
  const auto& u = lu.matrixLU();
  double log_abs = 0.0;
  double arg = 0.0;
  bool warn = false;
  for (Eigen::Index i = 0; i < u.rows(); ++i) {
    const Cplx p = u(i, i);
    if (p.real() <= 0.0) warn = true;
    log_abs += std::log(std::abs(p));
    arg += std::arg(p);
  }
  if (lu.permutationP().determinant() < 0) arg += std::numbers::pi;
  // Reduce the accumulated argument to the principal interval.
  arg = std::remainder(arg, 2.0 * std::numbers::pi);
  if (pivot_warning) *pivot_warning = warn;
  return {log_abs, arg};
}

TraceLogResult trace_log(const BandedOperator& op, int n, int max_terms) {
  const Eigen::MatrixXcd t = compress(op, n);
  const Eigen::MatrixXcd r =
      Eigen::MatrixXcd::Identity(t.rows(), t.cols()) - t;
  TraceLogResult res;
  res.contraction = inf_norm(r);
  res.terms_used = neumann_terms(res.contraction, 1e-12, max_terms);
  Cplx series{0.0, 0.0};
  Eigen::MatrixXcd pw = r;
  for (int m = 1; m <= res.terms_used; ++m) {
    series -= pw.trace() / static_cast<double>(m);
    if (m < res.terms_used) pw = pw * r;
  }
  res.series_value = series;
  res.lu_value = log_det_lu(t, &res.pivot_warning);
  return res;
}

Eigen::MatrixXcd operator_log(const BandedOperator& op, double tol, int max_terms,
                              int* terms_used) {
  const Eigen::MatrixXcd& b = op.matrix();
  const Eigen::MatrixXcd w = Eigen::MatrixXcd::Identity(b.rows(), b.cols()) - b;
  const double r = inf_norm(w);
  const int M = neumann_terms(r, tol, max_terms);
  if (terms_used) *terms_used = M;
  Eigen::MatrixXcd result = Eigen::MatrixXcd::Zero(b.rows(), b.cols());
  Eigen::MatrixXcd pw = w;
  for (int m = 1; m <= M; ++m) {
    result -= pw / static_cast<double>(m);
    if (m < M) pw = pw * w;
  }
  return result;
}

Cplx trace_pi(const Eigen::MatrixXcd& x, int N, int k) {
  if (k < 0) return {0.0, 0.0};
  if (k == 0) return x(N, N);
  return x(k + N, k + N) + x(-k + N, -k + N);
}

}  // namespace szegolab::circ
