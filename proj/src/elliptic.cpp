#include "conemet/elliptic.hpp"

#include <cmath>
#include <string>

#include "conemet/errors.hpp"
#include "conemet/gamma_kernel.hpp"

namespace conemet {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kHalfPi = 1.570796326794896619231321691639751442;

EvalResult scale_half_pi(EvalResult r) {
  r.value *= kHalfPi;
  return r;
}

// z -> 1-z with the side swap; rejects interior real z < 0 (the image would
// land on the cut without a side).
CutPoint complement_point(const CutPoint& pt, const char* who) {
  if (pt.on_the_cut()) {
    // image 1-z <= 0 is real, off the cut
    return CutPoint::interior(1.0 - pt.z);
  }
  const Complex w = 1.0 - pt.z;
  if (w.imag() == 0.0 && w.real() >= 1.0) {
    if (w.real() == 1.0) return CutPoint::on_cut(1.0, Side::plus);
    throw CutSideError(std::string(who) +
                       ": complementary argument 1-z lies on [1,inf); "
                       "evaluate at 1-z with an explicit side");
  }
  return CutPoint::interior(w);
}

}  // namespace

SignatureParam SignatureParam::from_a(double a) {
  if (!std::isfinite(a) || a <= 0.0 || a >= 1.0)
    throw ParameterError("SignatureParam: a must lie in (0,1)");
  if (a < 1e-8 || a > 1.0 - 1e-8)
    throw ParameterError("SignatureParam: a within 1e-8 of an endpoint; "
                         "connection coefficients are ill-conditioned");
  const double alpha = std::fabs(1.0 - 2.0 * a);
  if (alpha != 0.0 && alpha < 1e-6)
    throw ParameterError("SignatureParam: a within 1e-6 of 1/2 (but not "
                         "exactly 1/2); use a = 1/2 or move a away");
  return {a, alpha};
}

SignatureParam SignatureParam::from_alpha(double alpha) {
  if (!std::isfinite(alpha) || alpha < 0.0 || alpha >= 1.0)
    throw ParameterError("SignatureParam: alpha must lie in [0,1)");
  return from_a((1.0 - alpha) / 2.0);
}

EvalResult elliptic_k(const SignatureParam& s, const CutPoint& pt) {
  return scale_half_pi(hyp2f1({s.a, 1.0 - s.a, 1.0}, pt));
}

EvalResult elliptic_e(const SignatureParam& s, const CutPoint& pt) {
  return scale_half_pi(hyp2f1({s.a - 1.0, 1.0 - s.a, 1.0}, pt));
}

EvalResult elliptic_k_star(const SignatureParam& s, const CutPoint& pt) {
  return elliptic_k(s, complement_point(pt, "elliptic_k_star"));
}

EvalResult elliptic_e_star(const SignatureParam& s, const CutPoint& pt) {
  return elliptic_e(s, complement_point(pt, "elliptic_e_star"));
}

EvalResult elliptic_k_deriv(const SignatureParam& s, const CutPoint& pt) {
  const Complex z = pt.z;
  if (z == Complex(0.0, 0.0) || z == Complex(1.0, 0.0))
    throw SingularPointError("elliptic_k_deriv: singular at z = 0, 1");
  const EvalResult k = elliptic_k(s, pt);
  const EvalResult e = elliptic_e(s, pt);
  EvalResult r;
  r.value = (1.0 - s.a) * (e.value - (1.0 - z) * k.value) / (z * (1.0 - z));
  r.terms_used = k.terms_used + e.terms_used;
  const double num_scale =
      std::abs(e.value) + std::abs((1.0 - z) * k.value);
  const double cancel =
      num_scale / std::max(std::abs(e.value - (1.0 - z) * k.value), 1e-300);
  r.est_rel_err = cancel * (k.est_rel_err + e.est_rel_err + 4e-16);
  r.method = k.method;
  return r;
}

double elliott_residual(const SignatureParam& s, Complex z) {
  if (z.imag() == 0.0 && (z.real() <= 0.0 || z.real() >= 1.0))
    throw DomainError("elliott_residual: z must lie off both rays "
                      "(-inf,0] and [1,inf)");
  const CutPoint p = CutPoint::interior(z);
  const CutPoint q = CutPoint::interior(1.0 - z);
  const Complex k = elliptic_k(s, p).value;
  const Complex e = elliptic_e(s, p).value;
  const Complex ks = elliptic_k(s, q).value;
  const Complex es = elliptic_e(s, q).value;
  const double v = kPi * std::sin(kPi * s.a) / (4.0 * (1.0 - s.a));
  return std::abs(ks * e + es * k - ks * k - v) / v;
}

}  // namespace conemet
