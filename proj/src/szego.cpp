#include "szegolab/szego.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <set>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "szegolab/combinatorics.hpp"
#include "szegolab/omega.hpp"

namespace szegolab::szego {

namespace {

// The two circle calibration signs, each fixed once by an exact matrix
// witness (see the tests) and frozen; every other (m, symbol) combination is
// a prediction.
constexpr double kUpsilon2Sign = -1.0;
constexpr double kUpsilon3SubSign = -1.0;

std::vector<circ::TrigPoly> symbol_powers(const circ::TrigPoly& b, int top) {
  std::vector<circ::TrigPoly> pw;
  pw.reserve(top + 1);
  pw.push_back(circ::TrigPoly{std::vector<Cplx>{Cplx{1.0, 0.0}}});
  for (int l = 1; l <= top; ++l) pw.push_back(circ::multiply(pw.back(), b));
  return pw;
}

using LaurentMap = std::map<int, Cplx>;

Cplx laurent_at(const LaurentMap& m, int k) {
  auto it = m.find(k);
  return it == m.end() ? Cplx{0.0, 0.0} : it->second;
}

// Convolution powers g^0..g^top of a finitely supported coefficient map.
std::vector<LaurentMap> fc_powers(const std::map<int, Cplx>& fc, int top) {
  std::vector<LaurentMap> pw(top + 1);
  pw[0][0] = Cplx{1.0, 0.0};
  for (int l = 1; l <= top; ++l)
    for (const auto& [k1, v1] : pw[l - 1])
      for (const auto& [k2, v2] : fc) pw[l][k1 + k2] += v1 * v2;
  return pw;
}

// sum_{p >= p_min} c_{p+2} sum_{l composition of p into t parts}
//   prod_i (g^{l_i})^_{-w_i} / l_i,
// by the same truncated-series DP as the composition maps.
Cplx composition_series(const fmaps::PowerSeries& f, const std::vector<LaurentMap>& pw,
                        const std::vector<int>& w, int p_min) {
  const int t = static_cast<int>(w.size());
  const int p_max = f.degree() - 2;
  std::vector<std::vector<Cplx>> d(t + 1, std::vector<Cplx>(p_max + 1, Cplx{0.0, 0.0}));
  d[0][0] = Cplx{1.0, 0.0};
  for (int i = 1; i <= t; ++i)
    for (int q = i; q <= p_max; ++q) {
      Cplx acc{0.0, 0.0};
      for (int l = 1; l <= q - (i - 1); ++l) {
        const Cplx g = laurent_at(pw[l], -w[i - 1]);
        if (g != Cplx{0.0, 0.0}) acc += d[i - 1][q - l] * g / static_cast<double>(l);
      }
      d[i][q] = acc;
    }
  Cplx out{0.0, 0.0};
  for (int p = std::max(p_min, t); p <= p_max; ++p) out += f.coeffs[p + 1] * d[t][p];
  return out;
}

// All t-tuples from the candidate mode list summing to `target`; the last
// entry is determined by the constraint.
template <typename Fn>
void for_each_mode_tuple(const std::vector<int>& cand, int t, int target, long& budget,
                         Fn&& fn) {
  std::vector<int> w(t);
  auto rec = [&](auto&& self, int pos, int partial) -> void {
    if (--budget < 0) throw std::runtime_error("lambda_eval: enumeration budget exceeded");
    if (pos == t - 1) {
      const int last = target - partial;
      if (std::binary_search(cand.begin(), cand.end(), last)) {
        w[t - 1] = last;
        fn(w);
      }
      return;
    }
    for (int v : cand) {
      w[pos] = v;
      self(self, pos + 1, partial + v);
    }
  };
  rec(rec, 0, 0);
}

}  // namespace

double sslt_constant(const circ::TrigPoly& b, int log_degree) {
  const int K = log_degree > 0 ? log_degree : std::max(48, 8 * std::max(b.degree(), 1));
  const circ::TrigPoly lb = circ::log_symbol(b, K);
  double total = 0.0;
  for (int k = 1; k <= K; ++k) total += k * std::real(lb.coeff(k) * lb.coeff(-k));
  return total;
}

double upsilon2_circle(int m, const circ::TrigPoly& b0) {
  if (m < 2) throw std::invalid_argument("upsilon2_circle: need m >= 2");
  const auto pw = symbol_powers(b0, m - 1);
  double total = 0.0;
  for (int j = 1; j <= m - 1; ++j) {
    const auto& pj = pw[j];
    const auto& pq = pw[m - j];
    const int k_top = std::min(pj.degree(), pq.degree());
    for (int k = 1; k <= k_top; ++k) {
      const Cplx pair = pj.coeff(k) * pq.coeff(-k) + pj.coeff(-k) * pq.coeff(k);
      total += k * (m / (2.0 * j * (m - j))) * std::real(pair);
    }
  }
  return kUpsilon2Sign * total;
}

double upsilon3_sub_circle(int m, const circ::TrigPoly& b0, const circ::TrigPoly& bsub) {
  if (m < 2) throw std::invalid_argument("upsilon3_sub_circle: need m >= 2");
  const auto pw = symbol_powers(b0, m - 1);
  double total = 0.0;
  for (int j = 1; j <= m - 1; ++j) {
    const auto& pj = pw[j];
    const auto qj = circ::multiply(pw[m - 1 - j], bsub);
    const int k_top = std::min(pj.degree(), qj.degree());
    for (int nu = 1; nu <= k_top; ++nu) {
      const Cplx pair = pj.coeff(nu) * qj.coeff(-nu) + pj.coeff(-nu) * qj.coeff(nu);
      total += nu * (1.0 / j) * std::real(pair);
    }
  }
  return kUpsilon3SubSign * m * total;
}

std::pair<double, double> upsilon_series(const fmaps::PowerSeries& f,
                                         const circ::TrigPoly& b0,
                                         const circ::TrigPoly& bsub) {
  const double r = b0.sup_norm() + bsub.sup_norm();
  // Geometric tail check: |c_m| r^m must be decreasing near the truncation.
  double prev = -1.0;
  for (int i = std::max(0, f.degree() - 4); i < f.degree(); ++i) {
    const double t = std::abs(f.coeffs[i]) * std::pow(r, i + 1);
    if (prev > 0.0 && t >= prev)
      throw std::runtime_error("upsilon_series: coefficient tail is not decaying");
    if (t > 0.0) prev = t;
  }
  double u2 = 0.0, u3 = 0.0;
  for (int i = 0; i < f.degree(); ++i) {
    if (std::abs(std::imag(f.coeffs[i])) > 0.0)
      throw std::invalid_argument("upsilon_series: coefficients must be real");
    const double c = std::real(f.coeffs[i]);
    const int m = i + 1;
    if (m < 2 || c == 0.0) continue;
    u2 += c * upsilon2_circle(m, b0);
    u3 += c * upsilon3_sub_circle(m, b0, bsub);
  }
  return {u2, u3};
}

Cplx upsilon3_0_eval(const fmaps::PowerSeries& f, const GeodesicData& g) {
  const int m_max = f.degree();
  if (m_max < 2 || g.fc.empty()) return Cplx{0.0, 0.0};
  const auto pw = fc_powers(g.fc, m_max);
  int k_abs = 0;
  for (const auto& [k, v] : g.fc) k_abs = std::max(k_abs, std::abs(k));
  Cplx total{0.0, 0.0};
  for (int m = 2; m <= m_max; ++m) {
    const Cplx cm = f.coeffs[m - 1];
    if (cm == Cplx{0.0, 0.0}) continue;
    Cplx s1{0.0, 0.0};
    for (int j = 1; j <= m - 1; ++j)
      for (int k = 1; k <= k_abs * m; ++k) {
        const Cplx a = laurent_at(pw[j], -k);
        const Cplx b = laurent_at(pw[m - j], k);
        if (a == Cplx{0.0, 0.0} || b == Cplx{0.0, 0.0}) continue;
        const double weight = static_cast<double>(k) * k + (1.0 + g.alpha / 2.0) * k;
        s1 += weight * (m / 2.0) * a * b / static_cast<double>(j * (m - j));
      }
    Cplx s2{0.0, 0.0};
    for (int k1 = 1; k1 <= m - 2; ++k1)
      for (int k2 = 1; k2 <= m - 1 - k1; ++k2) {
        const int k3 = m - k1 - k2;
        for (int k = 1; k <= k_abs * k1; ++k)
          for (int l = 1; l <= k_abs * k2; ++l) {
            const Cplx a = laurent_at(pw[k1], -k);
            const Cplx b = laurent_at(pw[k2], -l);
            const Cplx c = laurent_at(pw[k3], k + l);
            if (a == Cplx{0.0, 0.0} || b == Cplx{0.0, 0.0} || c == Cplx{0.0, 0.0}) continue;
            s2 += static_cast<double>(k) * l * a * b * c / static_cast<double>(k1 * k2);
          }
      }
    total += cm * (s1 + s2);
  }
  return static_cast<double>(g.d - 1) * total;
}

LambdaValues lambda_eval(const fmaps::PowerSeries& f, const GeodesicData& g) {
  LambdaValues out;
  // On a one-dimensional model the bracket terms are absent: the functionals
  // vanish identically no matter what table is supplied.
  if (g.d <= 1) return out;
  const int p_max = f.degree() - 2;
  if (p_max < 1 || g.poisson.empty() || g.fc.empty()) return out;
  const auto pw = fc_powers(g.fc, p_max);

  // Candidate block modes when t blocks share the composition budget: -w must
  // lie in the support of some power g^l with l <= p_max - (t-1).
  const auto candidates = [&](int t) {
    std::set<int> s;
    for (int l = 1; l <= p_max - (t - 1); ++l)
      for (const auto& [k, v] : pw[l])
        if (v != Cplx{0.0, 0.0}) s.insert(-k);
    return std::vector<int>(s.begin(), s.end());
  };
  long budget = 50'000'000;

  Cplx acc1{0.0, 0.0}, acc2{0.0, 0.0}, acc3{0.0, 0.0};
  for (const auto& [kk, p_val] : g.poisson) {
    const int target = -(kk.first + kk.second);
    omega::OmegaArgs a;
    a.kappa1 = kk.first;
    a.kappa2 = kk.second;

    for (int j = 1; j <= p_max; ++j) {
      const auto cand = candidates(j);
      for_each_mode_tuple(cand, j, target, budget, [&](const std::vector<int>& w) {
        a.mu.assign(w.begin(), w.end());
        a.nu.clear();
        a.rho.clear();
        const auto om = omega::omega1(a);
        if (om == 0) return;
        acc1 += (static_cast<double>(om) / comb::factorial(j)) * p_val *
                composition_series(f, pw, w, 1);
      });
    }

    for (int j = 1; j <= p_max - 1; ++j)
      for (int k = 1; j + k <= p_max; ++k) {
        const auto cand = candidates(j + k);
        const double wt = comb::factorial(j) * comb::factorial(k);
        for_each_mode_tuple(cand, j + k, target, budget, [&](const std::vector<int>& w) {
          a.mu.assign(w.begin(), w.begin() + j);
          a.nu.assign(w.begin() + j, w.end());
          a.rho.clear();
          const auto om = omega::omega2(a);
          if (om == 0) return;
          acc2 += (static_cast<double>(om) / wt) * p_val * composition_series(f, pw, w, 2);
        });
      }

    for (int j = 1; j <= p_max - 2; ++j)
      for (int k = 1; j + k <= p_max - 1; ++k)
        for (int l = 1; j + k + l <= p_max; ++l) {
          const auto cand = candidates(j + k + l);
          const double wt = comb::factorial(j) * comb::factorial(k) * comb::factorial(l);
          for_each_mode_tuple(cand, j + k + l, target, budget,
                              [&](const std::vector<int>& w) {
                                a.mu.assign(w.begin(), w.begin() + j);
                                a.nu.assign(w.begin() + j, w.begin() + j + k);
                                a.rho.assign(w.begin() + j + k, w.end());
                                const auto om = omega::omega3(a);
                                if (om == 0) return;
                                acc3 += (static_cast<double>(om) / wt) * p_val *
                                        composition_series(f, pw, w, 3);
                              });
        }
  }

  const Cplx pref{0.0, -0.5};  // 1/(2i)
  out.l1 = pref * acc1;
  out.l2 = pref * acc2;
  out.l3 = pref * acc3;
  return out;
}

Corollary4Prediction corollary4_predict(const circ::TrigPoly& b0, const circ::TrigPoly& bsub,
                                        const tracesum::TraceSequence& trace_data,
                                        int max_residue) {
  if (max_residue < 2) throw std::invalid_argument("corollary4_predict: need max_residue >= 2");
  const int K = std::max(48, 8 * std::max({b0.degree(), bsub.degree(), 1}));
  const circ::TrigPoly lb = circ::log_symbol(b0, K);
  const circ::TrigPoly ratio = circ::divide_symbols(bsub, b0, K);

  Corollary4Prediction out;
  out.c1 = 2.0 * std::real(lb.coeff(0));
  out.c_log = 2.0 * std::real(ratio.coeff(0));
  for (int k = 1; k <= K; ++k) out.sslt_part += k * std::real(lb.coeff(k) * lb.coeff(-k));

  double cross = 0.0;
  for (int k = 1; k <= K; ++k) cross += k * std::real(lb.coeff(k) * ratio.coeff(-k));
  double quad0 = std::real(ratio.coeff(0));  // (ratio + ratio^2)^_0 by Parseval
  for (int k = -K; k <= K; ++k) quad0 += std::real(ratio.coeff(k) * ratio.coeff(-k));
  out.c_minus1 = cross + quad0;

  // Leading residues of Tr(pi_k log B) are exact from the symbols; fit only
  // the tail residues so prediction and fit share no data.
  const int k_hi = static_cast<int>(trace_data.traces.size()) - 1;
  const int k_lo = std::max(8, k_hi / 2);
  const auto fit = tracesum::fit_residues(trace_data.traces, 1, k_lo, k_hi, max_residue, 2,
                                          {out.c1, out.c_log});
  out.residues = fit.residues;
  out.fit_condition = fit.condition;

  tracesum::TraceSequence ts;
  ts.traces = trace_data.traces;
  ts.residues = fit.residues;
  ts.d = 1;
  out.log_constant = tracesum::c_constant(ts);

  double zeta_tail = 0.0;
  for (int l = 2; l <= max_residue; ++l) zeta_tail += tracesum::zeta(l) * fit.residues[l];
  out.c0 = out.sslt_part + out.log_constant + tracesum::kEulerGamma * out.c_log + zeta_tail;
  return out;
}

namespace {

std::function<double(double)> parse_basis_fn(const std::string& token) {
  if (token == "1") return [](double) { return 1.0; };
  if (token == "n") return [](double n) { return n; };
  if (token == "log n" || token == "logn") return [](double n) { return std::log(n); };
  if (token == "1/n") return [](double n) { return 1.0 / n; };
  if (token.rfind("n^", 0) == 0) {
    const double a = std::stod(token.substr(2));
    return [a](double n) { return std::pow(n, a); };
  }
  if (token.rfind("1/n^", 0) == 0) {
    const double a = std::stod(token.substr(4));
    return [a](double n) { return std::pow(n, -a); };
  }
  throw std::invalid_argument("fit_asymptotics: unknown basis token '" + token + "'");
}

}  // namespace

void FitReport::set_prediction(const std::vector<double>& pred, const std::vector<double>& tol) {
  if (pred.size() != coefficients.size() || tol.size() != coefficients.size())
    throw std::invalid_argument("FitReport: prediction shape mismatch");
  predicted = pred;
  tolerances = tol;
  has_verdict = true;
  pass = true;
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    if (std::abs(coefficients[i] - predicted[i]) > tolerances[i]) pass = false;
}

std::string FitReport::to_json() const {
  nlohmann::json j;
  j["window"] = {{"n_lo", n_lo}, {"n_hi", n_hi}};
  j["basis"] = basis;
  j["coefficients"] = coefficients;
  j["predicted"] = predicted;
  j["tolerances"] = tolerances;
  j["verdict"] = has_verdict ? (pass ? "pass" : "fail") : "none";
  j["residual_norm"] = residual_norm;
  j["condition"] = condition;
  return j.dump(2);
}

FitReport fit_asymptotics(const std::vector<std::pair<long, double>>& series,
                          const std::vector<std::string>& basis) {
  if (basis.empty()) throw std::invalid_argument("fit_asymptotics: empty basis");
  if (series.size() < 2 * basis.size())
    throw std::invalid_argument("fit_asymptotics: need at least 2x more points than basis");
  std::vector<std::function<double(double)>> fns;
  fns.reserve(basis.size());
  for (const auto& token : basis) fns.push_back(parse_basis_fn(token));

  Eigen::MatrixXd a(series.size(), basis.size());
  Eigen::VectorXd y(series.size());
  for (std::size_t i = 0; i < series.size(); ++i) {
    y(i) = series[i].second;
    for (std::size_t c = 0; c < fns.size(); ++c)
      a(i, c) = fns[c](static_cast<double>(series[i].first));
  }
  Eigen::VectorXd scales(basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    scales(c) = a.col(c).norm();
    if (scales(c) == 0.0) throw std::runtime_error("fit_asymptotics: zero basis column");
    a.col(c) /= scales(c);
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double cond = sv(0) / sv(sv.size() - 1);
  if (cond > 1e12) throw std::runtime_error("fit_asymptotics: basis is rank deficient on window");
  Eigen::VectorXd coef = svd.solve(y);

  FitReport report;
  report.basis = basis;
  report.condition = cond;
  report.n_lo = series.front().first;
  report.n_hi = series.front().first;
  for (const auto& [n, v] : series) {
    report.n_lo = std::min(report.n_lo, n);
    report.n_hi = std::max(report.n_hi, n);
  }
  for (std::size_t c = 0; c < basis.size(); ++c)
    report.coefficients.push_back(coef(c) / scales(c));
  for (std::size_t i = 0; i < series.size(); ++i) {
    double model = 0.0;
    for (std::size_t c = 0; c < basis.size(); ++c)
      model += report.coefficients[c] * fns[c](static_cast<double>(series[i].first));
    report.residual_norm = std::max(report.residual_norm, std::abs(series[i].second - model));
  }
  return report;
}

std::pair<Cplx, Cplx> roccaforte_check(const circ::BandedOperator& op, int m, int n_power,
                                       const std::function<Cplx(const Eigen::MatrixXcd&)>& weightfn) {
  if (m < 2) throw std::invalid_argument("roccaforte_check: need m >= 2");
  if (n_power < 1) throw std::invalid_argument("roccaforte_check: need n_power >= 1");
  const int bw = op.bandwidth();
  const long tuples = static_cast<long>(std::pow(2.0 * bw + 1.0, m - 1));
  if (tuples > 2'000'000) throw std::invalid_argument("roccaforte_check: budget exceeded");

  std::vector<circ::BandedOperator> blocks;
  blocks.reserve(2 * bw + 1);
  for (int k = -bw; k <= bw; ++k) blocks.push_back(circ::fourier_block(op, k));
  const auto block_of = [&](int k) -> const Eigen::MatrixXcd& {
    return blocks[k + bw].matrix();
  };

  // Multi-index side: odometer over the first m-1 modes, last one forced.
  Cplx lhs{0.0, 0.0};
  std::vector<int> kappa(m, -bw);
  while (true) {
    int sum = 0;
    for (int i = 0; i < m - 1; ++i) sum += kappa[i];
    kappa[m - 1] = -sum;
    if (std::abs(kappa[m - 1]) <= bw) {
      long run = 0, min_run = 0;
      for (int i = 0; i < m; ++i) {
        run += kappa[i];
        min_run = std::min(min_run, run);
      }
      if (min_run != 0) {
        Eigen::MatrixXcd prod = block_of(kappa[0]);
        for (int i = 1; i < m; ++i) prod = prod * block_of(kappa[i]);
        lhs += std::pow(static_cast<double>(min_run), n_power) * weightfn(prod);
      }
    }
    int pos = m - 2;
    while (pos >= 0 && kappa[pos] == bw) kappa[pos--] = -bw;
    if (pos < 0) break;
    ++kappa[pos];
  }

  // Single-index side through the sign-projected iterated products.
  const auto family = circ::plus_minus_parts(op, m - 1);
  Cplx rhs{0.0, 0.0};
  for (int kappa_neg = -(m - 1) * bw; kappa_neg <= -1; ++kappa_neg) {
    Eigen::MatrixXcd total =
        Eigen::MatrixXcd::Zero(op.matrix().rows(), op.matrix().cols());
    bool any = false;
    for (int j = 1; j <= m - 1; ++j) {
      const auto bm = circ::fourier_block(family.minus[j - 1], kappa_neg);
      const auto bp = circ::fourier_block(family.plus[m - j - 1], -kappa_neg);
      if (bm.matrix().isZero(0.0) || bp.matrix().isZero(0.0)) continue;
      total += bm.matrix() * bp.matrix();
      any = true;
    }
    if (any) rhs += std::pow(static_cast<double>(kappa_neg), n_power) * weightfn(total);
  }
  return {lhs, rhs};
}

std::vector<Cplx> log_det_series(const circ::BandedOperator& op, const std::vector<int>& ns,
                                 int jobs) {
  std::vector<Cplx> out(ns.size());
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(ns.size())));
  std::vector<std::thread> pool;
  std::atomic<std::size_t> next{0};
  const auto work = [&]() {
    for (std::size_t i = next.fetch_add(1); i < ns.size(); i = next.fetch_add(1))
      out[i] = circ::log_det_lu(circ::compress(op, ns[i]));
  };
  if (workers == 1) {
    work();
  } else {
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  return out;
}

tracesum::TraceSequence trace_log_sequence(const circ::BandedOperator& op, int k_max,
                                           double tol, int max_terms) {
  if (k_max > op.cutoff())
    throw std::invalid_argument("trace_log_sequence: k_max exceeds operator cutoff");
  int terms = 0;
  const Eigen::MatrixXcd lg = circ::operator_log(op, tol, max_terms, &terms);
  tracesum::TraceSequence ts;
  ts.d = 1;
  ts.traces.resize(k_max + 1);
  for (int k = 0; k <= k_max; ++k)
    ts.traces[k] = std::real(circ::trace_pi(lg, op.cutoff(), k));
  return ts;
}

}  // namespace szegolab::szego
