#include "conemet/oracle.hpp"

#include <cmath>

#include "conemet/cone_metric.hpp"
#include "conemet/errors.hpp"
#include "conemet/quadrature.hpp"

namespace conemet {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

double quad_elliptic_k(const SignatureParam& s, double x) {
  if (!(x < 1.0) || !std::isfinite(x))
    throw DomainError("quad_elliptic_k: requires real x < 1");
  const double a = s.a;
  const double sa = std::sin(kPi * a);
  return tanh_sinh_01(
      [a, sa, x](double t, double omt) {
        const double om_t2 = omt * (1.0 + t);  // 1 - t^2 without cancellation
        return sa * std::pow(t, 1.0 - 2.0 * a) * std::pow(om_t2, a - 1.0) *
               std::pow(1.0 - x * t * t, -a);
      },
      1e-12);
}

double quad_elliptic_e(const SignatureParam& s, double x) {
  if (!(x <= 1.0) || !std::isfinite(x))
    throw DomainError("quad_elliptic_e: requires real x <= 1");
  const double a = s.a;
  const double sa = std::sin(kPi * a);
  return tanh_sinh_01(
      [a, sa, x](double t, double omt) {
        const double om_t2 = omt * (1.0 + t);
        // at x = 1 the singular endpoint factors cancel exactly
        const double om_xt2 = x == 1.0 ? om_t2 : 1.0 - x * t * t;
        return sa * std::pow(t, 1.0 - 2.0 * a) *
               std::pow(om_xt2 / om_t2, 1.0 - a);
      },
      1e-12);
}

double quad_axis_distance(const SignatureParam& s, double x, double y) {
  if (!(x > 0.0) || !(y >= x) || !std::isfinite(y))
    throw DomainError("quad_axis_distance: requires 0 < x <= y");
  if (x == y) return 0.0;
  return adaptive_gauss_kronrod(
      [&s](double t) { return rho(s, Complex(-t, 0.0)); }, x, y, 1e-10);
}

}  // namespace conemet
