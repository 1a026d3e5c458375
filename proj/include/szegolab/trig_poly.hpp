#pragma once
// Trigonometric polynomials on the circle, stored as Fourier coefficients
// over modes -K..K.  These are the symbols from which the banded operator
// model is built; all products/powers are exact coefficient convolutions,
// and transcendental functions of a symbol (log, quotient) are recovered by
// sampling + trapezoid projection, which is spectrally accurate for smooth
// 2*pi-periodic functions.

#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace szegolab::circ {

using Cplx = std::complex<double>;

class TrigPoly {
 public:
  TrigPoly() : coeffs_(1, Cplx{0.0, 0.0}) {}
  // Coefficients ordered by mode -K..K; size must be 2K+1.
  explicit TrigPoly(std::vector<Cplx> coeffs);

  int degree() const { return (static_cast<int>(coeffs_.size()) - 1) / 2; }
  // Coefficient of mode k; zero beyond the degree.
  Cplx coeff(int k) const;
  void set_coeff(int k, Cplx v);

  Cplx eval(double x) const;  // sum_k c_k e^{ikx}
  // Conjugate-symmetry defect max_k |c_k - conj(c_{-k})|; a real-valued
  // symbol has defect 0 up to rounding.
  double real_defect() const;
  double sup_norm(int samples = 1024) const;

  // JSON round-trip: {"degree": K, "re": [...], "im": [...]}, modes -K..K.
  std::string to_json() const;
  static TrigPoly from_json(const std::string& text);

 private:
  std::vector<Cplx> coeffs_;
};

// Fourier coefficients of a smooth 2*pi-periodic function through mode K by
// the trapezoid rule on num_points >= 4K+8 uniform points (spectrally exact
// for trigonometric polynomials of degree <= K).  num_points = 0 picks the
// minimum allowed.
TrigPoly fourier_coeffs(const std::function<double(double)>& f, int K, int num_points = 0);

TrigPoly multiply(const TrigPoly& a, const TrigPoly& b);
TrigPoly power(const TrigPoly& a, int j);  // j >= 0
TrigPoly add(const TrigPoly& a, const TrigPoly& b);
TrigPoly scale(const TrigPoly& a, Cplx s);

// log(b) for a strictly positive real symbol, projected to degree K.
TrigPoly log_symbol(const TrigPoly& b, int K);
// a/b for real symbols with b strictly positive, projected to degree K.
TrigPoly divide_symbols(const TrigPoly& a, const TrigPoly& b, int K);

// Named presets used by the CLI and tests.
TrigPoly preset_exp_cos(double a, int K = 24);      // exp(a cos x)
TrigPoly preset_one_plus_c_cos(double c);           // 1 + c cos x (exact, K=1)

// CSV export of an (n, value) series with a header line.
std::string series_to_csv(const std::vector<std::pair<int, double>>& series,
                          const std::string& value_name);

}  // namespace szegolab::circ
