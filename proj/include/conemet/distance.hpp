#ifndef CONEMET_DISTANCE_HPP
#define CONEMET_DISTANCE_HPP

// Geodesic distance induced by rho_alpha.  Along the negative axis the
// distance is a difference of the closed-form potential
//
//   Phi_a(x) = -1/2 log( G(a) F(a,a;2a;1/(1+x)) / F(a,a;1;x/(1+x))
//                        - cos(pi a) ),      G(a) = G(a)/(G(2a)G(1-a)),
//
// so that int_x^y rho_alpha(-t) dt = Phi_a(y) - Phi_a(x).  General pairs
// go through the triangle map, which embeds (H, rho_alpha) isometrically
// into the hyperbolic plane; opposite-half-plane pairs are joined through
// the best crossing point on the real axis.

#include <complex>

#include "conemet/elliptic.hpp"

namespace conemet {

// A point -x on the negative real axis (x > 0), or the end at infinity.
struct AxisPoint {
  double x = 0.0;
  bool infinite = false;

  static AxisPoint at(double x);
  static AxisPoint infinity();
};

// Phi_a; Phi_a(infinity) = -1/2 log|cos(pi a)| is finite for a != 1/2
// (DivergenceError at a = 1/2, where the end is a cusp).
double axis_potential(const SignatureParam& s, const AxisPoint& p);

// Phi_a(y) - Phi_a(x) for 0 < x <= y.
double axis_distance(const SignatureParam& s, double x, double y);

// d_alpha(z1, z2) for z1, z2 off the punctures.  Pairs within one closed
// half plane use arctanh |(w2-w1)/(w2-conj w1)| with w = triangle map;
// strictly opposite half planes minimize the through-axis sum over the
// crossing point with a golden-section search per axis component.
double geodesic_distance(const SignatureParam& s, Complex z1, Complex z2);

// d_alpha(-|z1|, -|z2|) = axis_distance(|z1|, |z2|); requires
// |z1| <= |z2|.  Always a lower bound for geodesic_distance(z1, z2).
double radial_lower_bound(const SignatureParam& s, Complex z1, Complex z2);

}  // namespace conemet

#endif
