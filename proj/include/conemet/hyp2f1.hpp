#ifndef CONEMET_HYP2F1_HPP
#define CONEMET_HYP2F1_HPP

// Gauss hypergeometric function F(a,b;c;z) for complex z on the cut plane
// C \ [1,inf), for the real parameter families arising from generalized
// elliptic integrals: (a,1-a;1), (a-1,1-a;1), (a,a;2a), (a,a;1) with
// a in (0,1).  Boundary values on the cut (1,inf) are available as
// side-tagged limits from above (plus) or below (minus).
//
// Evaluation strategy over the cut plane:
//   |z| <= 0.75                  defining power series
//   Re z <= 1/2                  Pfaff map w = z/(z-1), then series or the
//                                (1-w) connection (covers z -> -inf)
//   Re z > 1/2, z near 1         connection series in (1-z): logarithmic
//                                case for c = a+b, psi-series with a single
//                                log term for c = a+b+1, two-term power
//                                connection otherwise
//   z near/on the ray (1,inf)    boundary-value formula splitting F into
//                                F(a,a;2a;1/z) and F(a,a;1;1-1/z) with the
//                                phase exp(-+ pi a i); also used slightly
//                                off the ray by analytic continuation
//   otherwise (two small lens-   Taylor-step continuation of the
//   shaped zones near the points hypergeometric ODE along a path from the
//   exp(+-i pi/3), where every   origin through the upper half plane
//   series argument has modulus
//   ~1)

#include <complex>

namespace conemet {

using Complex = std::complex<double>;

enum class Side { interior, plus, minus };

// A point of the cut plane, or a point on [1,inf) tagged with the side it
// is approached from.
struct CutPoint {
  Complex z;
  Side side = Side::interior;

  // z must lie off the real ray [1,inf).
  static CutPoint interior(Complex z);
  // x must be real >= 1; at x = 1 both side limits coincide.
  static CutPoint on_cut(double x, Side side);
  // Limit convention of the closed upper half plane: real x >= 1 becomes a
  // plus-side point, everything else is interior.
  static CutPoint upper_limit(Complex z);

  bool on_the_cut() const { return side != Side::interior; }
};

enum class Method {
  direct_series,
  pfaff,
  log_connection,
  cut_formula,
  taylor_ode,
};

const char* method_name(Method m);

struct EvalResult {
  Complex value;
  int terms_used = 0;
  double est_rel_err = 0.0;
  Method method = Method::direct_series;
};

struct HypParams {
  double a, b, c;
};

// Defining power series; caller must keep |z| <= 0.75.  Terminates when the
// term magnitude stays below 1e-17 of the partial sum for three consecutive
// terms (hard cap 10000 terms).
EvalResult hyp2f1_series(const HypParams& p, Complex z);

// Full connection series of F(a,b;a+b;z) in powers of (1-z), with digamma
// coefficients.  Requires |1-z| <= 0.75 and z off [1,inf).
EvalResult hyp2f1_log_connection(double a, double b, Complex z);

// Boundary values F(a,1-a;1;(1+x) -+ i0) for x > 0 via the splitting into
// F(a,a;2a;1/(1+x)) and F(a,a;1;x/(1+x)); conj(plus) = minus.
EvalResult hyp2f1_cut(const HypParams& p, double x, Side side);

// Region-dispatched evaluation anywhere on the cut plane or on the cut.
EvalResult hyp2f1(const HypParams& p, const CutPoint& pt);

namespace detail {
// F(a,b;c;z) evaluated from w = 1-z handed over exactly; for |w| below
// ~1e-16 the point z itself is not representable, but the connection
// series in w still is.  Requires |w| <= 0.75 and w off (-inf,0], and
// c - a - b in {0, 1} or non-integer.
EvalResult hyp2f1_near_one(const HypParams& p, Complex one_minus_z);
}

// Residual of the product identity obtained from the a <-> 1-a symmetry of
// the triangle map:
//   G(a)   F(a,a;2a;1-x)     F(1-a,1-a;1;x)
// - G(1-a) F(1-a,1-a;2-2a;1-x) F(a,a;1;x)
// - 2 cos(pi a) F(a,a;1;x) F(1-a,1-a;1;x)
// with G(a) = Gamma(a)/(Gamma(2a)Gamma(1-a)), normalized by the largest of
// the three terms.  Vanishes identically for a in (0,1), x in (0,1).
double reflection_identity_residual(double a, double x);

}  // namespace conemet

#endif
