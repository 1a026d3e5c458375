#pragma once
// Gauss-Legendre quadrature on an interval, used only by integral
// cross-checks (the production formulas in this project are exact monomial
// sums; integrals appear as independent verification paths).

#include <vector>

namespace szegolab::quad {

struct Rule {
  std::vector<double> nodes;    // in (a, b)
  std::vector<double> weights;  // positive, summing to b - a
};

// n-point Gauss-Legendre rule on [a, b]; exact for polynomials of degree
// 2n-1.  Nodes are computed by Newton iteration on the Legendre polynomial
// from the Chebyshev initial guess (standard Golub-Welsch-free approach).
Rule gauss_legendre(int n, double a, double b);

// Convenience: integrate fn over [a, b] with an n-point rule.
template <typename F>
double integrate(const F& fn, double a, double b, int n = 64) {
  const Rule r = gauss_legendre(n, a, b);
  double s = 0.0;
  for (std::size_t i = 0; i < r.nodes.size(); ++i) s += r.weights[i] * fn(r.nodes[i]);
  return s;
}

}  // namespace szegolab::quad
