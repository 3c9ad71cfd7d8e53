#ifndef CONEMET_ORACLE_HPP
#define CONEMET_ORACLE_HPP

// Independent slow reference evaluators used to certify the series-based
// fast paths: tanh-sinh quadrature of the Euler integral representations
//   K_a(x) = sin(pi a) int_0^1 t^{1-2a} (1-t^2)^{a-1} (1-x t^2)^{-a} dt
//   E_a(x) = sin(pi a) int_0^1 t^{1-2a} ((1-x t^2)/(1-t^2))^{1-a} dt
// on the real slice, and adaptive quadrature of the density along the
// negative axis.  These never call the hypergeometric series code.

#include "conemet/elliptic.hpp"

namespace conemet {

// Real x < 1; absolute error <= 1e-11.
double quad_elliptic_k(const SignatureParam& s, double x);

// Real x <= 1 (integrable at x = 1); absolute error <= 1e-11.
double quad_elliptic_e(const SignatureParam& s, double x);

// integral_x^y rho_alpha(-t) dt by adaptive Gauss-Kronrod, 0 < x <= y,
// absolute tolerance 1e-10.
double quad_axis_distance(const SignatureParam& s, double x, double y);

}  // namespace conemet

#endif
