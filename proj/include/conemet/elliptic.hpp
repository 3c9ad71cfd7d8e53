#ifndef CONEMET_ELLIPTIC_HPP
#define CONEMET_ELLIPTIC_HPP

// Generalized complete elliptic integrals with signature 1/a:
//   K_a(z) = (pi/2) F(a, 1-a; 1; z)
//   E_a(z) = (pi/2) F(a-1, 1-a; 1; z)
// as single-valued analytic functions on C \ [1,inf), plus the
// complementary functions K_a(1-z), E_a(1-z), the derivative identity from
// Gauss' contiguous relations, and the Legendre-type (Elliott) relation.
//
// Note the argument convention: the classical integrals of modulus k
// correspond to z = k^2 here.

#include <complex>

#include "conemet/hyp2f1.hpp"

namespace conemet {

// Parameter a in (0,1) together with the derived cone angle
// alpha = |1-2a| in [0,1).  a and 1-a describe the same geometry.
struct SignatureParam {
  double a;
  double alpha;

  static SignatureParam from_a(double a);
  // Uses the representative a = (1-alpha)/2 <= 1/2.
  static SignatureParam from_alpha(double alpha);
};

EvalResult elliptic_k(const SignatureParam& s, const CutPoint& pt);
EvalResult elliptic_e(const SignatureParam& s, const CutPoint& pt);

// Complementary functions: the argument map z -> 1-z swaps the side tags.
// Interior input with real z < 0 would land on the cut and is rejected;
// evaluate at 1-z with an explicit side instead.
EvalResult elliptic_k_star(const SignatureParam& s, const CutPoint& pt);
EvalResult elliptic_e_star(const SignatureParam& s, const CutPoint& pt);

// K_a'(z) = (1-a) [E_a(z) - (1-z) K_a(z)] / (z (1-z)).
EvalResult elliptic_k_deriv(const SignatureParam& s, const CutPoint& pt);

// |K_a(1-z) E_a(z) + E_a(1-z) K_a(z) - K_a(1-z) K_a(z) - V| / V
// with V = pi sin(pi a) / (4(1-a)); identically 0 in exact arithmetic.
// Requires z off both rays (-inf,0] and [1,inf).
double elliott_residual(const SignatureParam& s, Complex z);

}  // namespace conemet

#endif
