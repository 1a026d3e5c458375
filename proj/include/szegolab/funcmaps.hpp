#pragma once
// Linear j-maps on analytic functions without constant term.
//
// These maps send a function f(z) = sum_{m>=1} c_m z^m to weighted
// composition sums in j arguments; they are the coefficient machinery behind
// second- and third-order trace asymptotics.  Everything is monomial-first:
// the closed composition sums are the definitions, and the integral /
// contour representations are exercised only as cross-checks in the tests.
//
//   w2[z^m](x1,x2)        = (m/2) sum_{j=1}^{m-1} x1^j x2^{m-j} / (j(m-j))
//   w2_tilde[z^m](x1,x2)  = (m/2) sum_{j=1}^{m-1} x1^j x2^{m-1-j} / j
//   f_map[j][z^m](x)      = sum_{k |= m into j} prod_{i<j} x_i^{k_i}/k_i * x_j^{k_j}
//   w3[z^m]               = f_map[3][z^m]  (vanishes for m <= 2)
//   phi[j][z^m](x)        = sum_{l |= m into j} prod_i x_i^{l_i}/l_i
//   phi_tilde[j][m](x)    = h_m(x_1,...,x_j)   (complete homogeneous symmetric)
//
// Composition sums are evaluated by truncated power-series products (exact
// coefficient DP), never by enumerating compositions, so large degrees are
// cheap and the enumeration oracle in the tests stays independent.

#include <complex>
#include <utility>
#include <vector>

namespace szegolab::fmaps {

using Cplx = std::complex<double>;
using CVec = std::vector<Cplx>;

// Coefficients c_1..c_M of an analytic function with no constant term:
// coeffs[i] is c_{i+1}.
struct PowerSeries {
  CVec coeffs;
  int degree() const { return static_cast<int>(coeffs.size()); }
};

Cplx w2_monomial(int m, Cplx x1, Cplx x2);

// W2 applied to log with base point 1:  -(1/2) log x1 log x2.
double w2_log(double x1, double x2);

Cplx w2_tilde_monomial(int m, Cplx x1, Cplx x2);

Cplx w3_monomial(int m, Cplx x1, Cplx x2, Cplx x3);

// Arity j >= 2; x has exactly j entries; zero for m < j.
Cplx f_map_monomial(int j, int m, const CVec& x);

// Arity j >= 1; x has exactly j entries; zero for m < j.
Cplx phi_monomial(int j, int m, const CVec& x);

// Complete homogeneous symmetric polynomial h_m(x_1..x_j), m >= 0.
Cplx phi_tilde(int j, int m, const CVec& x);

// sum_m c_m phi_monomial(j, m, x) over the truncated series.
Cplx phi_series(int j, const PowerSeries& f, const CVec& x);

// Merge identity for Phi maps, both sides evaluated independently:
//   LHS = sum_{a+b+c=p} sum_{alpha,beta,gamma} 1/(alpha! beta! gamma!)
//           Phi_alpha[z^a](x..) Phi_beta[z^b](y..) Phi_gamma[z^c](z..)
//   RHS = sum_{alpha,beta,gamma} 1/(alpha! beta! gamma!)
//           Phi_{alpha+beta+gamma}[z^p](x_1..x_alpha, y_1..y_beta, z_1..z_gamma)
// Lists must have at least p-2 entries each (all surviving arities).
std::pair<Cplx, Cplx> phi_merge_check(int p, const CVec& x, const CVec& y, const CVec& z);

}  // namespace szegolab::fmaps
