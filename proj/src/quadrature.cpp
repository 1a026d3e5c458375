#include "szegolab/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace szegolab::quad {

Rule gauss_legendre(int n, double a, double b) {
  if (n < 1) throw std::invalid_argument("rule size must be positive");
  Rule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev guess for the i-th root of P_n, refined by Newton.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      // Evaluate P_n(x) and P_n'(x) by the three-term recurrence.
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    // Map from [-1,1] to [a,b]; roots come in symmetric pairs.
    const double mid = 0.5 * (a + b), rad = 0.5 * (b - a);
    rule.nodes[i] = mid - rad * x;
    rule.nodes[n - 1 - i] = mid + rad * x;
    rule.weights[i] = rad * w;
    rule.weights[n - 1 - i] = rad * w;
  }
  return rule;
}

}  // namespace szegolab::quad
