#include "szegolab/funcmaps.hpp"

#include <cmath>
#include <stdexcept>

#include "szegolab/combinatorics.hpp"

namespace szegolab::fmaps {
namespace {

void check_arity(int j, const CVec& x, const char* where) {
  if (j < 0 || static_cast<int>(x.size()) != j)
    throw std::invalid_argument(std::string(where) + ": argument list length must equal arity");
}

// Truncated series sum_{l=1}^{m} x^l w_l t^l with w_l = 1/l (harmonic) or 1.
CVec harmonic_series(Cplx x, int m) {
  CVec s(m + 1, Cplx{0.0, 0.0});
  Cplx p{1.0, 0.0};
  for (int l = 1; l <= m; ++l) {
    p *= x;
    s[l] = p / static_cast<double>(l);
  }
  return s;
}

CVec plain_series(Cplx x, int m) {
  CVec s(m + 1, Cplx{0.0, 0.0});
  Cplx p{1.0, 0.0};
  for (int l = 1; l <= m; ++l) {
    p *= x;
    s[l] = p;
  }
  return s;
}

CVec convolve_trunc(const CVec& a, const CVec& b, int m) {
  CVec c(m + 1, Cplx{0.0, 0.0});
  for (int i = 0; i <= m; ++i) {
    if (a[i] == Cplx{0.0, 0.0}) continue;
    for (int k = 0; i + k <= m; ++k) c[i + k] += a[i] * b[k];
  }
  return c;
}

}  // namespace

Cplx w2_monomial(int m, Cplx x1, Cplx x2) {
  if (m < 1) throw std::invalid_argument("w2_monomial: degree must be >= 1");
  Cplx s{0.0, 0.0};
  Cplx p1{1.0, 0.0};
  for (int j = 1; j <= m - 1; ++j) {
    p1 *= x1;
    s += p1 * std::pow(x2, m - j) / static_cast<double>(j * (m - j));
  }
  return 0.5 * static_cast<double>(m) * s;
}

double w2_log(double x1, double x2) {
  if (x1 <= 0.0 || x2 <= 0.0) throw std::domain_error("w2_log: arguments must be positive");
  return -0.5 * std::log(x1) * std::log(x2);
}

Cplx w2_tilde_monomial(int m, Cplx x1, Cplx x2) {
  if (m < 1) throw std::invalid_argument("w2_tilde_monomial: degree must be >= 1");
  Cplx s{0.0, 0.0};
  Cplx p1{1.0, 0.0};
  for (int j = 1; j <= m - 1; ++j) {
    p1 *= x1;
    s += p1 * std::pow(x2, m - 1 - j) / static_cast<double>(j);
  }
  return 0.5 * static_cast<double>(m) * s;
}

Cplx w3_monomial(int m, Cplx x1, Cplx x2, Cplx x3) {
  return f_map_monomial(3, m, {x1, x2, x3});
}

Cplx f_map_monomial(int j, int m, const CVec& x) {
  if (j < 2) throw std::invalid_argument("f_map_monomial: arity must be >= 2");
  check_arity(j, x, "f_map_monomial");
  if (m < j) return {0.0, 0.0};
  CVec prod = harmonic_series(x[0], m);
  for (int i = 1; i < j - 1; ++i) prod = convolve_trunc(prod, harmonic_series(x[i], m), m);
  prod = convolve_trunc(prod, plain_series(x[j - 1], m), m);
  return prod[m];
}

Cplx phi_monomial(int j, int m, const CVec& x) {
  if (j < 1) throw std::invalid_argument("phi_monomial: arity must be >= 1");
  check_arity(j, x, "phi_monomial");
  if (m < j) return {0.0, 0.0};
  CVec prod = harmonic_series(x[0], m);
  for (int i = 1; i < j; ++i) prod = convolve_trunc(prod, harmonic_series(x[i], m), m);
  return prod[m];
}

Cplx phi_tilde(int j, int m, const CVec& x) {
  check_arity(j, x, "phi_tilde");
  if (m < 0) throw std::invalid_argument("phi_tilde: degree must be >= 0");
  // h_m(x_1..x_v) = h_m(x_1..x_{v-1}) + x_v h_{m-1}(x_1..x_v), updated in
  // place over degrees; no cancellation for any inputs.
  CVec h(m + 1, Cplx{0.0, 0.0});
  h[0] = {1.0, 0.0};
  for (int v = 0; v < j; ++v)
    for (int d = 1; d <= m; ++d) h[d] += x[v] * h[d - 1];
  return h[m];
}

Cplx phi_series(int j, const PowerSeries& f, const CVec& x) {
  check_arity(j, x, "phi_series");
  Cplx s{0.0, 0.0};
  for (int m = 1; m <= f.degree(); ++m) {
    const Cplx c = f.coeffs[m - 1];
    if (c == Cplx{0.0, 0.0}) continue;
    s += c * phi_monomial(j, m, x);
  }
  return s;
}

std::pair<Cplx, Cplx> phi_merge_check(int p, const CVec& x, const CVec& y, const CVec& z) {
  if (p < 3) throw std::invalid_argument("phi_merge_check: p must be >= 3");
  const int need = p - 2;
  if (static_cast<int>(x.size()) < need || static_cast<int>(y.size()) < need ||
      static_cast<int>(z.size()) < need)
    throw std::invalid_argument("phi_merge_check: lists need at least p-2 entries");

  const auto prefix = [](const CVec& v, int n) { return CVec(v.begin(), v.begin() + n); };
  const auto invfact = [](int n) { return 1.0 / comb::factorial(n); };

  Cplx lhs{0.0, 0.0};
  for (int a = 1; a <= p - 2; ++a)
    for (int b = 1; b <= p - 1 - a; ++b) {
      const int c = p - a - b;
      for (int alpha = 1; alpha <= a; ++alpha) {
        const Cplx fx = phi_monomial(alpha, a, prefix(x, alpha));
        if (fx == Cplx{0.0, 0.0}) continue;
        for (int beta = 1; beta <= b; ++beta) {
          const Cplx fy = phi_monomial(beta, b, prefix(y, beta));
          if (fy == Cplx{0.0, 0.0}) continue;
          for (int gamma = 1; gamma <= c; ++gamma) {
            const Cplx fz = phi_monomial(gamma, c, prefix(z, gamma));
            lhs += invfact(alpha) * invfact(beta) * invfact(gamma) * fx * fy * fz;
          }
        }
      }
    }

  Cplx rhs{0.0, 0.0};
  for (int alpha = 1; alpha <= p - 2; ++alpha)
    for (int beta = 1; beta <= p - 1 - alpha; ++beta)
      for (int gamma = 1; gamma <= p - alpha - beta; ++gamma) {
        CVec merged = prefix(x, alpha);
        const CVec ypart = prefix(y, beta), zpart = prefix(z, gamma);
        merged.insert(merged.end(), ypart.begin(), ypart.end());
        merged.insert(merged.end(), zpart.begin(), zpart.end());
        rhs += invfact(alpha) * invfact(beta) * invfact(gamma) *
               phi_monomial(alpha + beta + gamma, p, merged);
      }

  return {lhs, rhs};
}

}  // namespace szegolab::fmaps
