#include "szegolab/trig_poly.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

namespace szegolab::circ {

using std::numbers::pi;

TrigPoly::TrigPoly(std::vector<Cplx> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty() || coeffs_.size() % 2 == 0)
    throw std::invalid_argument("TrigPoly: coefficient list must have odd length 2K+1");
}

Cplx TrigPoly::coeff(int k) const {
  const int K = degree();
  if (k < -K || k > K) return {0.0, 0.0};
  return coeffs_[k + K];
}

void TrigPoly::set_coeff(int k, Cplx v) {
  const int K = degree();
  if (k < -K || k > K) throw std::out_of_range("TrigPoly::set_coeff: mode beyond degree");
  coeffs_[k + K] = v;
}

Cplx TrigPoly::eval(double x) const {
  const int K = degree();
  Cplx s{0.0, 0.0};
  for (int k = -K; k <= K; ++k) s += coeff(k) * std::polar(1.0, k * x);
  return s;
}

double TrigPoly::real_defect() const {
  const int K = degree();
  double d = 0.0;
  for (int k = 0; k <= K; ++k) d = std::max(d, std::abs(coeff(k) - std::conj(coeff(-k))));
  return d;
}

double TrigPoly::sup_norm(int samples) const {
  double m = 0.0;
  for (int i = 0; i < samples; ++i) m = std::max(m, std::abs(eval(2.0 * pi * i / samples)));
  return m;
}

std::string TrigPoly::to_json() const {
  const int K = degree();
  nlohmann::json j;
  j["degree"] = K;
  std::vector<double> re, im;
  for (int k = -K; k <= K; ++k) {
    re.push_back(coeff(k).real());
    im.push_back(coeff(k).imag());
  }
  j["re"] = re;
  j["im"] = im;
  return j.dump();
}

TrigPoly TrigPoly::from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  const int K = j.at("degree").get<int>();
  const auto re = j.at("re").get<std::vector<double>>();
  const auto im = j.at("im").get<std::vector<double>>();
  if (static_cast<int>(re.size()) != 2 * K + 1 || im.size() != re.size())
    throw std::invalid_argument("TrigPoly JSON: coefficient arrays must have length 2K+1");
  std::vector<Cplx> c(2 * K + 1);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = {re[i], im[i]};
  return TrigPoly(std::move(c));
}

TrigPoly fourier_coeffs(const std::function<double(double)>& f, int K, int num_points) {
  if (K < 0) throw std::invalid_argument("fourier_coeffs: degree must be >= 0");
  const int min_points = 4 * K + 8;
  if (num_points == 0) num_points = min_points;
  if (num_points < min_points)
    throw std::invalid_argument("fourier_coeffs: need at least 4K+8 sample points");
  std::vector<double> samples(num_points);
  for (int i = 0; i < num_points; ++i) samples[i] = f(2.0 * pi * i / num_points);
  std::vector<Cplx> c(2 * K + 1, Cplx{0.0, 0.0});
  for (int k = -K; k <= K; ++k) {
    Cplx s{0.0, 0.0};
    for (int i = 0; i < num_points; ++i)
      s += samples[i] * std::polar(1.0, -k * 2.0 * pi * i / num_points);
    c[k + K] = s / static_cast<double>(num_points);
  }
  return TrigPoly(std::move(c));
}

TrigPoly multiply(const TrigPoly& a, const TrigPoly& b) {
  const int K = a.degree() + b.degree();
  std::vector<Cplx> c(2 * K + 1, Cplx{0.0, 0.0});
  for (int p = -a.degree(); p <= a.degree(); ++p) {
    if (a.coeff(p) == Cplx{0.0, 0.0}) continue;
    for (int q = -b.degree(); q <= b.degree(); ++q) c[p + q + K] += a.coeff(p) * b.coeff(q);
  }
  return TrigPoly(std::move(c));
}

TrigPoly power(const TrigPoly& a, int j) {
  if (j < 0) throw std::invalid_argument("power: exponent must be >= 0");
  TrigPoly r(std::vector<Cplx>{Cplx{1.0, 0.0}});
  for (int i = 0; i < j; ++i) r = multiply(r, a);
  return r;
}

TrigPoly add(const TrigPoly& a, const TrigPoly& b) {
  const int K = std::max(a.degree(), b.degree());
  std::vector<Cplx> c(2 * K + 1);
  for (int k = -K; k <= K; ++k) c[k + K] = a.coeff(k) + b.coeff(k);
  return TrigPoly(std::move(c));
}

TrigPoly scale(const TrigPoly& a, Cplx s) {
  std::vector<Cplx> c(2 * a.degree() + 1);
  for (int k = -a.degree(); k <= a.degree(); ++k) c[k + a.degree()] = s * a.coeff(k);
  return TrigPoly(std::move(c));
}

namespace {

// Sample a pointwise transform of real symbols and re-project to degree K.
TrigPoly project_pointwise(const std::function<double(double)>& g, int K) {
  return fourier_coeffs(g, K, std::max(4 * K + 8, 1024));
}

double real_value_checked(const TrigPoly& p, double x, const char* what) {
  const Cplx v = p.eval(x);
  if (std::abs(v.imag()) > 1e-9 * (1.0 + std::abs(v.real())))
    throw std::domain_error(std::string(what) + ": symbol is not real-valued");
  return v.real();
}

}  // namespace

TrigPoly log_symbol(const TrigPoly& b, int K) {
  return project_pointwise(
      [&](double x) {
        const double v = real_value_checked(b, x, "log_symbol");
        if (v <= 0.0) throw std::domain_error("log_symbol: symbol must be strictly positive");
        return std::log(v);
      },
      K);
}

TrigPoly divide_symbols(const TrigPoly& a, const TrigPoly& b, int K) {
  return project_pointwise(
      [&](double x) {
        const double den = real_value_checked(b, x, "divide_symbols");
        if (den <= 0.0)
          throw std::domain_error("divide_symbols: denominator must be strictly positive");
        return real_value_checked(a, x, "divide_symbols") / den;
      },
      K);
}

TrigPoly preset_exp_cos(double a, int K) {
  return fourier_coeffs([a](double x) { return std::exp(a * std::cos(x)); }, K,
                        std::max(4 * K + 8, 512));
}

TrigPoly preset_one_plus_c_cos(double c) {
  return TrigPoly(std::vector<Cplx>{Cplx{c / 2, 0.0}, Cplx{1.0, 0.0}, Cplx{c / 2, 0.0}});
}

std::string series_to_csv(const std::vector<std::pair<int, double>>& series,
                          const std::string& value_name) {
  std::string out = "n," + value_name + "\n";
  char buf[64];
  for (const auto& [n, v] : series) {
    std::snprintf(buf, sizeof(buf), "%d,%.17g\n", n, v);
    out += buf;
  }
  return out;
}

}  // namespace szegolab::circ
