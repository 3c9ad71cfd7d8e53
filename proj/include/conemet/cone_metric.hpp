#ifndef CONEMET_CONE_METRIC_HPP
#define CONEMET_CONE_METRIC_HPP

// Density of the hyperbolic metric (curvature -4) on the twice-punctured
// sphere with punctures at 0, 1 and a conical singularity of angle
// 2 pi alpha at infinity:
//
//   rho_alpha(z) = pi cos(pi alpha / 2)
//                  / ( 8 |z(1-z)| Re[ K_a(z) K_a(1 - conj z) ] ),
//
// with alpha = |1-2a|.  Also the conformal triangle map
// f_a(z) = i K_a(1-z)/K_a(z) taking the upper half plane onto the
// hyperbolic triangle with angles 0, 0, alpha*pi, asymptotic constants at
// the three singular points, the pushforward density under z -> 1/z, a
// two-point lower bound for densities on general domains, and monotonicity
// scans in the angular variable and in alpha.

#include <complex>
#include <optional>
#include <vector>

#include "conemet/elliptic.hpp"
#include "conemet/hyp2f1.hpp"

namespace conemet {

struct DensityResult {
  double value;
  Method method;        // method of the K_a(z) factor
  double est_rel_err;
  int terms_used;
};

// rho_alpha(z); z must avoid the punctures {0, 1}.  On the rays (-inf,0)
// and (1,inf) the two side limits of Re(K_a K_a) agree; both are computed,
// checked against each other, and averaged.
DensityResult rho_density(const SignatureParam& s, Complex z);
double rho(const SignatureParam& s, Complex z);

// Closed form at the symmetric point:
// rho_alpha(1/2) = 8 pi^2 / ( G((1+alpha)/4)^2 G((1-alpha)/4)^2
//                             cos(pi alpha / 2) ).
double rho_half(const SignatureParam& s);

// f_a on the closed upper half plane minus {0,1}; real points use the
// limit from above.  The image lies in the closed triangle
// {w : 0 <= Re w <= sin(pi a), |2 w sin(pi a) - 1| >= 1, Im w > 0}.
Complex triangle_map(const SignatureParam& s, Complex z);

// f_a'(z) = -i pi sin(pi a) / (4 z (1-z) K_a(z)^2).
Complex triangle_map_deriv(const SignatureParam& s, Complex z);

// Membership test for the closed triangle Delta_a (with tolerance slack).
bool in_triangle_closure(const SignatureParam& s, Complex w,
                         double slack = 1e-9);

struct AsymptoticConstants {
  double c0;                    // log rho + log|z| + log log(1/|z|) -> c0
  double c1;                    // same law at z = 1
  double exponent_inf;          // -(1+alpha)
  std::optional<double> c_inf;  // constant at infinity; empty when alpha=0
  bool cusp_at_infinity;        // alpha = 0: infinity is a cusp, and the
                                // near-puncture double-log law applies
};

AsymptoticConstants asymptotic_constants(const SignatureParam& s);

// Density at z of the metric with punctures {1, inf} and the cone point
// moved to 0: rho_alpha(1/z) / |z|^2.
double pushforward_density(const SignatureParam& s, Complex z);

// sup over ordered pairs (w0, w1) of distinct boundary samples of
// rho_alpha((z-w0)/(w1-w0)) / |w1-w0|; a lower bound for any admissible
// conical metric on a domain with that boundary.
double domain_lower_bound(const std::vector<Complex>& boundary,
                          const SignatureParam& s, Complex z);

// True iff rho_alpha(r e^{i theta_k}) is non-increasing over
// theta_k = k pi/(n+1), k = 1..n, within 1e-12 * max sampled value.
bool theta_monotone_scan(const SignatureParam& s, double r, int n);

// True iff rho_alpha(z) is non-increasing along a strictly ascending list
// of alpha values, within 1e-12 * max sampled value.
bool alpha_monotone_scan(Complex z, const std::vector<double>& alphas);

}  // namespace conemet

#endif
