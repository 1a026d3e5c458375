#include "szegolab/tracesum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/SVD>

namespace szegolab::tracesum {

double zeta(int l) {
  if (l < 2) throw std::invalid_argument("zeta: argument must be >= 2");
  static const double table[] = {
      1.6449340668482264,  // zeta(2)
      1.2020569031595943,  // zeta(3)
      1.0823232337111382,  // zeta(4)
      1.0369277551433699,  // zeta(5)
      1.0173430619844491,  // zeta(6)
      1.0083492773819228,  // zeta(7)
      1.0040773561979443,  // zeta(8)
      1.0020083928260822,  // zeta(9)
      1.0009945751278181,  // zeta(10)
      1.0004941886041195,  // zeta(11)
      1.0002460865533080,  // zeta(12)
      1.0001227133475785,  // zeta(13)
      1.0000612481350587,  // zeta(14)
      1.0000305882363070,  // zeta(15)
  };
  if (l <= 15) return table[l - 2];
  // Direct sum: for l >= 16 the tail beyond k = 200 is below 1e-30.
  double s = 0.0;
  for (int k = 200; k >= 1; --k) s += std::pow(k, -l);
  return s;
}

PowerSumResult power_sum(long n, int m) {
  if (n < 1) throw std::invalid_argument("power_sum: n must be >= 1");
  const double nd = static_cast<double>(n);
  double exact = 0.0;
  for (long k = 1; k <= n; ++k) exact += std::pow(static_cast<double>(k), m);
  PowerSumResult r{exact, 0.0, 0};
  if (m >= 2) {
    r.predicted = std::pow(nd, m + 1) / (m + 1) + std::pow(nd, m) / 2.0 +
                  (m / 12.0) * std::pow(nd, m - 1);
    r.remainder_exp = m - 2;
  } else if (m == 1) {
    r.predicted = nd * nd / 2.0 + nd / 2.0;
    r.remainder_exp = -1000;  // exact
  } else if (m == 0) {
    r.predicted = nd;
    r.remainder_exp = -1000;  // exact
  } else if (m == -1) {
    r.predicted = std::log(nd) + kEulerGamma + 0.5 / nd;
    r.remainder_exp = -2;
  } else if (m == -2) {
    r.predicted = zeta(2) - 1.0 / nd;
    r.remainder_exp = -2;
  } else {
    r.predicted = zeta(-m);
    r.remainder_exp = m + 1;
  }
  return r;
}

double tail_eps(const TraceSequence& ts, int k) {
  if (k < 1 || k >= static_cast<int>(ts.traces.size()))
    throw std::out_of_range("tail_eps: level outside computed range");
  double model = 0.0;
  for (std::size_t l = 0; l < ts.residues.size(); ++l)
    model += ts.residues[l] * std::pow(static_cast<double>(k), ts.d - 1 - static_cast<int>(l));
  return ts.traces[k] - model;
}

double c_constant(const TraceSequence& ts) {
  const int kmax = static_cast<int>(ts.traces.size()) - 1;
  if (kmax < 8) throw std::invalid_argument("c_constant: trace window too short");
  double c = ts.traces[0];
  for (int k = 1; k <= kmax; ++k) c += tail_eps(ts, k);

  // Tail diagnostics on the last two quarters of the window: mean |eps| must
  // decay, and a k^{-p} fit of the decay supplies the tail estimate.
  double a1 = 0.0, a2 = 0.0, scale = 1.0;
  const int q = kmax / 4;
  for (int k = kmax - 2 * q + 1; k <= kmax - q; ++k) a1 += std::abs(tail_eps(ts, k));
  for (int k = kmax - q + 1; k <= kmax; ++k) a2 += std::abs(tail_eps(ts, k));
  for (int k = 1; k <= kmax; ++k) scale = std::max(scale, std::abs(ts.traces[k]));
  a1 /= q;
  a2 /= q;
  // A tail at rounding level carries no information; the sum is complete.
  if (a2 <= 1e-12 * scale) return c;
  if (a2 >= a1) throw std::runtime_error("c_constant: tail is not decaying");
  const double k1 = kmax - 1.5 * q, k2 = kmax - 0.5 * q;
  const double p = std::log(a1 / a2) / std::log(k2 / k1);
  if (p <= 1.1) throw std::runtime_error("c_constant: tail decays too slowly to sum");
  // sum_{k > kmax} eps_k ~ eps_kmax * kmax / (p - 1), with the sign of the
  // boundary value (crude but only used when the tail is already tiny).
  c += tail_eps(ts, kmax) * kmax / (p - 1.0);
  return c;
}

double prop3_predict(const TraceSequence& ts, long n) {
  const auto R = [&](std::size_t l) {
    return l < ts.residues.size() ? ts.residues[l] : 0.0;
  };
  const double nd = static_cast<double>(n);
  const double C = c_constant(ts);
  const int L = static_cast<int>(ts.residues.size()) - 1;
  if (ts.d == 1) {
    double zsum = 0.0;
    for (int l = 2; l <= L; ++l) zsum += zeta(l) * R(l);
    return nd * R(0) + std::log(nd) * R(1) + (C + kEulerGamma * R(1) + zsum) +
           (0.5 * R(1) - R(2)) / nd;
  }
  if (ts.d == 2) {
    double zsum = 0.0;
    for (int l = 2; l + 1 <= L; ++l) zsum += zeta(l) * R(l + 1);
    return nd * nd * 0.5 * R(0) + nd * (0.5 * R(0) + R(1)) + std::log(nd) * R(2) +
           (C + kEulerGamma * R(2) + zsum);
  }
  const int d = ts.d;
  if (d < 3) throw std::invalid_argument("prop3_predict: d must be >= 1");
  double zsum = 0.0;
  for (int l = 2; l + d - 1 <= L; ++l) zsum += zeta(l) * R(l + d - 1);
  return std::pow(nd, d) * R(0) / d + std::pow(nd, d - 1) * (0.5 * R(0) + R(1) / (d - 1)) +
         std::pow(nd, d - 2) * ((d - 1) / 12.0 * R(0) + 0.5 * R(1) + R(2) / (d - 2)) +
         std::log(nd) * R(d) + (C + kEulerGamma * R(d) + zsum);
}

double exact_partial_sum(const TraceSequence& ts, long n) {
  if (n < 0 || n >= static_cast<long>(ts.traces.size()))
    throw std::out_of_range("exact_partial_sum: n outside computed trace range");
  double s = 0.0;
  for (long k = 0; k <= n; ++k) s += ts.traces[k];
  return s;
}

ResidueFit fit_residues(const std::vector<double>& traces, int d, int k_lo, int k_hi,
                        int L, int l_min, const std::vector<double>& fixed) {
  if (k_lo < 1 || k_hi >= static_cast<int>(traces.size()) || k_lo >= k_hi)
    throw std::invalid_argument("fit_residues: window outside computed range");
  if (l_min > 0 && static_cast<int>(fixed.size()) < l_min)
    throw std::invalid_argument("fit_residues: need l_min prescribed residues");
  const int n_coef = L - l_min + 1;
  if (n_coef < 1) throw std::invalid_argument("fit_residues: empty coefficient range");

  // Log-spaced sample of the window (deduplicated), at least 2 points per
  // coefficient.
  std::vector<int> ks;
  const int target = std::max(2 * n_coef + 4, 24);
  for (int i = 0; i < target; ++i) {
    const double t = static_cast<double>(i) / (target - 1);
    const int k = static_cast<int>(std::lround(k_lo * std::pow(double(k_hi) / k_lo, t)));
    if (ks.empty() || k > ks.back()) ks.push_back(k);
  }
  if (static_cast<int>(ks.size()) < 2 * n_coef)
    throw std::invalid_argument("fit_residues: window too short for requested order");

  Eigen::MatrixXd a(ks.size(), n_coef);
  Eigen::VectorXd y(ks.size());
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const double k = ks[i];
    double rhs = traces[ks[i]];
    for (int l = 0; l < l_min; ++l) rhs -= fixed[l] * std::pow(k, d - 1 - l);
    y(i) = rhs;
    for (int l = l_min; l <= L; ++l) a(i, l - l_min) = std::pow(k, d - 1 - l);
  }
  // Column scaling keeps the nearly collinear k^{-l} basis well conditioned.
  Eigen::VectorXd scales(n_coef);
  for (int c = 0; c < n_coef; ++c) {
    scales(c) = a.col(c).norm();
    if (scales(c) == 0.0) throw std::runtime_error("fit_residues: zero design column");
    a.col(c) /= scales(c);
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const double cond =
      svd.singularValues()(0) / svd.singularValues()(svd.singularValues().size() - 1);
  if (cond > 1e10) throw std::runtime_error("fit_residues: design matrix ill-conditioned");
  Eigen::VectorXd coef = svd.solve(y);
  for (int c = 0; c < n_coef; ++c) coef(c) /= scales(c);

  ResidueFit fit;
  fit.residues.assign(fixed.begin(), fixed.begin() + l_min);
  for (int c = 0; c < n_coef; ++c) fit.residues.push_back(coef(c));
  fit.condition = cond;
  fit.residual_norm = 0.0;
  for (int k = k_lo; k <= k_hi; ++k) {
    double model = 0.0;
    for (int l = 0; l <= L; ++l) model += fit.residues[l] * std::pow(double(k), d - 1 - l);
    fit.residual_norm = std::max(fit.residual_norm, std::abs(traces[k] - model));
  }
  return fit;
}

std::string trace_sequence_to_csv(const TraceSequence& ts) {
  std::string out = "k,trace\n";
  char buf[64];
  for (std::size_t k = 0; k < ts.traces.size(); ++k) {
    std::snprintf(buf, sizeof(buf), "%zu,%.17g\n", k, ts.traces[k]);
    out += buf;
  }
  return out;
}

}  // namespace szegolab::tracesum
