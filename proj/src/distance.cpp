#include "conemet/distance.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "conemet/cone_metric.hpp"
#include "conemet/errors.hpp"
#include "conemet/gamma_kernel.hpp"

namespace conemet {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double phi_finite(const SignatureParam& s, double x) {
  const double a = s.a;
  const double g =
      std::exp(log_gamma(a) - log_gamma(2.0 * a) - log_gamma(1.0 - a));
  const Complex w1(1.0 / (1.0 + x), 0.0);
  const Complex w2(x / (1.0 + x), 0.0);
  const double f1 = hyp2f1({a, a, 2.0 * a}, CutPoint::interior(w1)).value.real();
  const double f2 = hyp2f1({a, a, 1.0}, CutPoint::interior(w2)).value.real();
  const double u = g * f1 / f2 - std::cos(kPi * a);
  if (!(u > 0.0))
    throw NoConvergenceError("axis_potential: non-positive interior value");
  return -0.5 * std::log(u);
}

// Hyperbolic distance in the upper half plane, written so that the
// arctanh argument near 1 keeps full precision:
//   den^2 - num^2 = 4 Im w1 Im w2.
double half_plane_distance(Complex w1, Complex w2) {
  const double num = std::abs(w2 - w1);
  if (num == 0.0) return 0.0;
  const double den = std::abs(w2 - std::conj(w1));
  const double v1 = w1.imag(), v2 = w2.imag();
  if (!(v1 > 0.0) || !(v2 > 0.0))
    throw DomainError("half_plane_distance: points must have Im > 0");
  return 0.5 * std::log((den + num) * (den + num) / (4.0 * v1 * v2));
}

// Golden-section minimum of f over (lo, hi); f is strictly convex along
// each boundary geodesic, so the interior minimum is unique when present.
double golden_min(const std::function<double(double)>& f, double lo,
                  double hi) {
  const double gr = 0.6180339887498948482;
  double a = lo, b = hi;
  double x1 = b - gr * (b - a);
  double x2 = a + gr * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 90; ++it) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = f(x2);
    }
  }
  return std::min(f1, f2);
}

}  // namespace

AxisPoint AxisPoint::at(double x) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw DomainError("AxisPoint: x must be finite and > 0");
  return {x, false};
}

AxisPoint AxisPoint::infinity() { return {0.0, true}; }

double axis_potential(const SignatureParam& s, const AxisPoint& p) {
  if (p.infinite) {
    if (std::fabs(s.a - 0.5) < 1e-12)
      throw DivergenceError("axis_potential: infinite at a = 1/2 (the end "
                            "at infinity is a cusp)");
    // for a > 1/2 the limit is |cos(pi a)| by the a <-> 1-a symmetry
    return -0.5 * std::log(std::fabs(std::cos(kPi * s.a)));
  }
  return phi_finite(s, p.x);
}

double axis_distance(const SignatureParam& s, double x, double y) {
  if (!(x > 0.0) || !(y >= x) || !std::isfinite(y))
    throw DomainError("axis_distance: requires 0 < x <= y");
  if (x == y) return 0.0;
  return phi_finite(s, y) - phi_finite(s, x);
}

double geodesic_distance(const SignatureParam& s, Complex z1, Complex z2) {
  for (Complex z : {z1, z2}) {
    if (z == Complex(0.0, 0.0) || z == Complex(1.0, 0.0))
      throw SingularPointError("geodesic_distance: singular point");
  }
  if (z1 == z2) return 0.0;
  const bool same_upper = z1.imag() >= 0.0 && z2.imag() >= 0.0;
  const bool same_lower = z1.imag() <= 0.0 && z2.imag() <= 0.0;
  if (same_upper || same_lower) {
    if (same_lower) {
      z1 = std::conj(z1);
      z2 = std::conj(z2);
    }
    return half_plane_distance(triangle_map(s, z1), triangle_map(s, z2));
  }
  // Strictly opposite half planes: every connecting path crosses the real
  // axis, which is pointwise fixed by the conjugation isometry, so
  // d(z1,z2) = min over real t of d(z1,t) + d(conj z2, t).  The axis minus
  // the punctures has components (-inf,0), (0,1), (1,inf); each maps to a
  // boundary geodesic of the triangle, and the sum of two hyperbolic
  // distances is convex along a geodesic.
  if (z1.imag() < 0.0) std::swap(z1, z2);
  const Complex w1 = triangle_map(s, z1);
  const Complex w2 = triangle_map(s, std::conj(z2));
  const auto through = [&](double theta) {
    const double t = std::tan(theta);
    const Complex wt = triangle_map(s, Complex(t, 0.0));
    return half_plane_distance(w1, wt) + half_plane_distance(wt, w2);
  };
  const double q = kPi / 4.0;
  const double inset = 1e-9;
  double best = golden_min(through, 0.0 + inset, q - inset);
  best = std::min(best, golden_min(through, q + inset, 0.5 * kPi - inset));
  best = std::min(best, golden_min(through, -0.5 * kPi + inset, 0.0 - inset));
  return best;
}

double radial_lower_bound(const SignatureParam& s, Complex z1, Complex z2) {
  const double r1 = std::abs(z1), r2 = std::abs(z2);
  if (!(r1 <= r2))
    throw DomainError("radial_lower_bound: requires |z1| <= |z2|");
  for (Complex z : {z1, z2}) {
    if (z == Complex(0.0, 0.0) || z == Complex(1.0, 0.0))
      throw SingularPointError("radial_lower_bound: singular point");
  }
  if (r1 == r2) return 0.0;
  return axis_distance(s, r1, r2);
}

}  // namespace conemet
