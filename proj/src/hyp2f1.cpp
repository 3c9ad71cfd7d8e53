#include "conemet/hyp2f1.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "conemet/errors.hpp"
#include "conemet/gamma_kernel.hpp"

namespace conemet {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kEps = 2.220446049250313e-16;
constexpr int kMaxTerms = 10000;
constexpr double kTermTol = 1e-17;

bool near_nonpositive_integer(double c) {
  return c < 0.5 && std::fabs(c - std::round(c)) < 1e-9;
}

bool is_k_family(const HypParams& p) {
  return std::fabs(p.c - 1.0) < 1e-12 && std::fabs(p.a + p.b - 1.0) < 1e-12;
}

// Principal log, except that a negative real w inherits the approach side
// of the original point z (w = 1-z flips the half plane).
Complex log_lower(Complex w, int zside) {
  if (w.imag() == 0.0 && w.real() < 0.0 && zside != 0)
    return {std::log(-w.real()), -zside * kPi};
  return std::log(w);
}

Complex pow_side(Complex w, double p, int zside) {
  return std::exp(p * log_lower(w, zside));
}

struct Inner {
  Complex value;
  int terms = 0;
  double err = 0.0;
  Method method = Method::direct_series;
};

Inner series_kernel(double a, double b, double c, Complex z) {
  Inner r;
  Complex s = 1.0;
  Complex u = 1.0;
  double abs_sum = 1.0;
  int consec = 0;
  for (int n = 0; n < kMaxTerms; ++n) {
    u *= (a + n) * (b + n) * z / ((c + n) * (n + 1.0));
    s += u;
    abs_sum += std::abs(u);
    r.terms = n + 1;
    if (std::abs(u) < kTermTol * std::abs(s)) {
      if (++consec >= 3) break;
    } else {
      consec = 0;
    }
  }
  const double mag = std::max(std::abs(s), 1e-300);
  r.value = s;
  r.err = kEps * abs_sum / mag + 3.0 * std::abs(u) / mag;
  if (r.terms >= kMaxTerms && r.err > 1e-12)
    throw NoConvergenceError("hyp2f1 series: term cap reached at |z|=" +
                             std::to_string(std::abs(z)));
  return r;
}

// F(a,b;a+b;z) expanded in w = 1-z with digamma coefficients (the
// logarithmic case c - a - b = 0).  Kernels take w itself so that callers
// holding a tiny 1-z can pass it exactly.
Inner log_case_kernel(double a, double b, Complex w, int zside) {
  const Complex lw = log_lower(w, zside);
  const double g = std::exp(log_gamma(a + b) - log_gamma(a) - log_gamma(b));
  double kappa = 2.0 * digamma(1.0) - digamma(a) - digamma(b);
  Complex p = 1.0;
  Complex s = p * (kappa - lw);
  double abs_sum = std::abs(s);
  Inner r;
  r.method = Method::log_connection;
  Complex t = s;
  int consec = 0;
  for (int n = 0; n < kMaxTerms; ++n) {
    p *= (a + n) * (b + n) * w / ((n + 1.0) * (n + 1.0));
    kappa += 2.0 / (n + 1.0) - 1.0 / (a + n) - 1.0 / (b + n);
    t = p * (kappa - lw);
    s += t;
    abs_sum += std::abs(t);
    r.terms = n + 1;
    if (std::abs(t) < kTermTol * std::abs(s)) {
      if (++consec >= 3) break;
    } else {
      consec = 0;
    }
  }
  const double mag = std::max(std::abs(s), 1e-300);
  r.value = g * s;
  r.err = kEps * abs_sum / mag + 3.0 * std::abs(t) / mag + 4.0 * kEps;
  if (r.terms >= kMaxTerms && r.err > 1e-12)
    throw NoConvergenceError("hyp2f1 log connection: term cap reached");
  return r;
}

// F(a,b;a+b+1;z) expanded in w = 1-z (c - a - b = 1): constant plus a
// w-series carrying one log term.
Inner m1_case_kernel(double a, double b, Complex w, int zside) {
  const double c = a + b + 1.0;
  const Complex lw = log_lower(w, zside);
  const double c1 =
      std::exp(log_gamma(c) - log_gamma(a + 1.0) - log_gamma(b + 1.0));
  const double c2 =
      gamma(c) / (detail::gamma_real(a) * detail::gamma_real(b));
  double kappa =
      -digamma(1.0) - digamma(2.0) + digamma(a + 1.0) + digamma(b + 1.0);
  Complex q = 1.0;
  Complex s = q * (lw + kappa);
  double abs_sum = std::abs(s);
  Inner r;
  r.method = Method::log_connection;
  Complex t = s;
  int consec = 0;
  for (int k = 0; k < kMaxTerms; ++k) {
    q *= (a + 1.0 + k) * (b + 1.0 + k) * w / ((k + 1.0) * (k + 2.0));
    kappa += -1.0 / (k + 1.0) - 1.0 / (k + 2.0) + 1.0 / (a + 1.0 + k) +
             1.0 / (b + 1.0 + k);
    t = q * (lw + kappa);
    s += t;
    abs_sum += std::abs(t);
    r.terms = k + 1;
    if (std::abs(t) < kTermTol * std::abs(s)) {
      if (++consec >= 3) break;
    } else {
      consec = 0;
    }
  }
  r.value = c1 + c2 * w * s;
  const double mag = std::max(std::abs(r.value), 1e-300);
  r.err = (std::fabs(c1) * 4.0 * kEps +
           std::abs(c2 * w) * (kEps * abs_sum + 3.0 * std::abs(t))) /
              mag +
          6.0 * kEps;
  if (r.terms >= kMaxTerms && r.err > 1e-12)
    throw NoConvergenceError("hyp2f1 m=1 connection: term cap reached");
  return r;
}

// Two-term power connection in w = 1-z for non-integer tau = c - a - b.
Inner power_case_kernel(double a, double b, double c, Complex w, int zside) {
  const double tau = c - a - b;
  if (std::fabs(tau) < 1e-6)
    throw ParameterError(
        "hyp2f1: parameters within 1e-6 of the logarithmic case "
        "c = a + b; use the exact representative instead");
  const double k1 = gamma(c) * detail::gamma_real(tau) /
                    (detail::gamma_real(c - a) * detail::gamma_real(c - b));
  const double k2 = gamma(c) * detail::gamma_real(-tau) /
                    (detail::gamma_real(a) * detail::gamma_real(b));
  Inner f1 = series_kernel(a, b, 1.0 - tau, w);
  Inner f2 = series_kernel(c - a, c - b, 1.0 + tau, w);
  const Complex t1 = k1 * f1.value;
  const Complex t2 = pow_side(w, tau, zside) * k2 * f2.value;
  Inner r;
  r.method = Method::log_connection;
  r.value = t1 + t2;
  r.terms = f1.terms + f2.terms;
  const double mag = std::max(std::abs(r.value), 1e-300);
  r.err = (std::abs(t1) * (f1.err + 4.0 * kEps) +
           std::abs(t2) * (f2.err + 6.0 * kEps)) /
          mag;
  if (r.err > 1e-9 && r.err > 0.5)
    throw NoConvergenceError("hyp2f1 power connection: catastrophic "
                             "cancellation");
  return r;
}

// Dispatch over the three connection structures, given w = 1-z.
Inner connection_kernel(double a, double b, double c, Complex w, int zside) {
  const double tau = c - a - b;
  const double it = std::round(tau);
  if (std::fabs(tau - it) < 1e-9) {
    if (it == 0.0) return log_case_kernel(a, b, w, zside);
    if (it == 1.0) return m1_case_kernel(a, b, w, zside);
    throw ParameterError("hyp2f1: unsupported integer c-a-b = " +
                         std::to_string(static_cast<int>(it)));
  }
  return power_case_kernel(a, b, c, w, zside);
}

Inner eval_interior(double a, double b, double c, Complex z, bool allow_pfaff);

// Boundary-value splitting of F(a,1-a;1;.) near or on the ray (1,inf):
//   F = z^{-a} [ G F(a,a;2a;1/z) - exp(sign * -pi a i) F(a,a;1;1-1/z) ]
// with G = Gamma(a)/(Gamma(2a)Gamma(1-a)); sign +1 for the limit from
// above, -1 from below.  Valid off the ray by analytic continuation within
// each half plane.
Inner cut_split_kernel(double a, Complex z, int sign) {
  const double g =
      std::exp(log_gamma(a) - log_gamma(2.0 * a) - log_gamma(1.0 - a));
  const Complex phase =
      std::exp(Complex(0.0, -static_cast<double>(sign) * kPi * a));
  Inner f1 = eval_interior(a, a, 2.0 * a, 1.0 / z, true);
  Inner f2 = eval_interior(a, a, 1.0, 1.0 - 1.0 / z, true);
  const Complex t1 = g * f1.value;
  const Complex t2 = phase * f2.value;
  Inner r;
  r.method = Method::cut_formula;
  r.value = std::pow(z, -a) * (t1 - t2);
  r.terms = f1.terms + f2.terms;
  const double mag = std::max(std::abs(t1 - t2), 1e-300);
  r.err = (std::abs(t1) * (f1.err + 4.0 * kEps) +
           std::abs(t2) * (f2.err + 2.0 * kEps)) /
              mag +
          kEps * (1.0 + std::fabs(a) * std::abs(std::log(z)));
  return r;
}

// One Taylor step of the hypergeometric ODE: given F, F' at z0, advance to
// z0 + dz.  Coefficients t_n satisfy
//   z0(1-z0)(n+2)(n+1) t_{n+2}
//     = [((a+b+1)z0 - c) - (1-2z0) n](n+1) t_{n+1} + (n+a)(n+b) t_n.
void taylor_step(double a, double b, double c, Complex z0, Complex dz,
                 Complex& f, Complex& fp, int& terms, double& err) {
  Complex t2 = f, t1 = fp;
  Complex F = t2 + t1 * dz;
  Complex Fp = t1;
  Complex dzn = dz;
  const Complex zz = z0 * (1.0 - z0);
  Complex last = t1 * dz;
  for (int n = 0; n < 400; ++n) {
    const Complex tn = (((a + b + 1.0) * z0 - c - (1.0 - 2.0 * z0) *
                         static_cast<double>(n)) * (n + 1.0) * t1 +
                        (n + a) * (n + b) * t2) /
                       (zz * (n + 2.0) * (n + 1.0));
    const Complex dznn = dzn * dz;
    F += tn * dznn;
    Fp += tn * (n + 2.0) * dzn;
    last = tn * dznn;
    ++terms;
    if (std::abs(last) < 1e-18 * (std::abs(F) + 1e-300)) break;
    t2 = t1;
    t1 = tn;
    dzn = dznn;
  }
  err += std::abs(last) / std::max(std::abs(F), 1e-300) + 8.0 * kEps;
  f = F;
  fp = Fp;
}

// Analytic continuation along 0.5i -> 0.65i -> target through the upper
// half plane; seeds from the defining series.  Targets handed here always
// keep distance > 0.75 from both regular singular points, so steps of
// 0.4 * dist({0,1}) stay well inside the disks of convergence.
Inner taylor_continue(double a, double b, double c, Complex target) {
  const Complex anchor(0.0, 0.5);
  Inner s0 = series_kernel(a, b, c, anchor);
  Inner s1 = series_kernel(a + 1.0, b + 1.0, c + 1.0, anchor);
  Complex f = s0.value;
  Complex fp = (a * b / c) * s1.value;
  Inner r;
  r.method = Method::taylor_ode;
  r.terms = s0.terms + s1.terms;
  r.err = s0.err + s1.err;
  Complex zcur = anchor;
  const Complex legs[2] = {Complex(0.0, 0.65), target};
  int steps = 0;
  for (const Complex& leg : legs) {
    while (std::abs(leg - zcur) > 1e-15) {
      if (++steps > 220)
        throw NoConvergenceError("hyp2f1 ODE continuation: too many steps");
      const double d = std::min(std::abs(zcur), std::abs(zcur - 1.0));
      const double step = std::min(0.4 * d, std::abs(leg - zcur));
      const Complex dz = (leg - zcur) / std::abs(leg - zcur) * step;
      taylor_step(a, b, c, zcur, dz, f, fp, r.terms, r.err);
      zcur += dz;
    }
  }
  r.value = f;
  return r;
}

Inner eval_interior(double a, double b, double c, Complex z,
                    bool allow_pfaff) {
  if (z == Complex(0.0, 0.0)) return {Complex(1.0, 0.0), 1, 0.0,
                                      Method::direct_series};
  if (z.imag() < 0.0) {
    Inner r = eval_interior(a, b, c, std::conj(z), allow_pfaff);
    r.value = std::conj(r.value);
    return r;
  }
  if (std::abs(z) <= 0.75) return series_kernel(a, b, c, z);
  if (allow_pfaff && z.real() <= 0.5) {
    const Complex w = z / (z - 1.0);  // |w| <= 1 on this half plane
    if (std::abs(w) <= 0.96 || std::abs(1.0 - w) <= 0.94) {
      Inner r = eval_interior(a, c - b, c, w, false);
      r.value *= std::pow(1.0 - z, -a);
      r.err += kEps * (1.0 + std::fabs(a) * std::abs(std::log(1.0 - z)));
      r.method = Method::pfaff;
      return r;
    }
  }
  if (z.real() > 0.5 && std::abs(1.0 - z) <= 0.96)
    return connection_kernel(a, b, c, 1.0 - z, 0);
  if (std::fabs(c - 1.0) < 1e-12 && std::fabs(a + b - 1.0) < 1e-12 &&
      std::abs(1.0 / z) <= 0.92 && std::abs(1.0 - 1.0 / z) <= 0.92)
    return cut_split_kernel(a, z, z.imag() > 0.0 ? 1 : -1);
  if (std::abs(z) <= 0.97) return series_kernel(a, b, c, z);
  if (std::abs(1.0 - z) <= 0.96) return connection_kernel(a, b, c, 1.0 - z, 0);
  return taylor_continue(a, b, c, z);
}

// Value at z = 1 (both side limits coincide; finite iff c - a - b > 0).
Inner gauss_value(double a, double b, double c) {
  const double tau = c - a - b;
  if (tau < 1e-12)
    throw DivergenceError("hyp2f1 diverges at z = 1 for c - a - b <= 0");
  Inner r;
  r.method = Method::log_connection;
  r.terms = 1;
  r.value = gamma(c) * gamma(tau) /
            (detail::gamma_real(c - a) * detail::gamma_real(c - b));
  r.err = 6.0 * kEps;
  return r;
}

Inner eval_on_cut(const HypParams& p, double x, Side side) {
  const int sign = side == Side::plus ? 1 : -1;
  if (x == 1.0) return gauss_value(p.a, p.b, p.c);
  if (is_k_family(p)) return cut_split_kernel(p.a, Complex(x, 0.0), sign);
  if (std::abs(1.0 - x) <= 0.96)
    return connection_kernel(p.a, p.b, p.c, Complex(1.0 - x, 0.0), sign);
  // Continue through the upper half plane down to the cut, conjugate for
  // the minus side.
  Inner r = taylor_continue(p.a, p.b, p.c, Complex(x, 0.0));
  if (sign < 0) r.value = std::conj(r.value);
  return r;
}

void validate_params(const HypParams& p) {
  if (!std::isfinite(p.a) || !std::isfinite(p.b) || !std::isfinite(p.c))
    throw ParameterError("hyp2f1: non-finite parameters");
  if (near_nonpositive_integer(p.c))
    throw ParameterError("hyp2f1: c must not be zero or a negative integer");
}

EvalResult to_result(const Inner& in) {
  EvalResult r;
  r.value = in.value;
  r.terms_used = in.terms;
  r.est_rel_err = in.err;
  r.method = in.method;
  if (!(r.est_rel_err < 1.0))
    throw NoConvergenceError("hyp2f1: estimated relative error >= 1");
  return r;
}

}  // namespace

const char* method_name(Method m) {
  switch (m) {
    case Method::direct_series: return "direct_series";
    case Method::pfaff: return "pfaff";
    case Method::log_connection: return "log_connection";
    case Method::cut_formula: return "cut_formula";
    case Method::taylor_ode: return "taylor_ode";
  }
  return "unknown";
}

CutPoint CutPoint::interior(Complex z) {
  if (z.imag() == 0.0 && z.real() >= 1.0)
    throw CutSideError("CutPoint::interior: point lies on [1,inf); "
                       "a side tag is required");
  return {z, Side::interior};
}

CutPoint CutPoint::on_cut(double x, Side side) {
  if (side == Side::interior)
    throw CutSideError("CutPoint::on_cut: side must be plus or minus");
  if (!std::isfinite(x) || x < 1.0)
    throw DomainError("CutPoint::on_cut: x must be real >= 1");
  return {Complex(x, 0.0), side};
}

CutPoint CutPoint::upper_limit(Complex z) {
  if (z.imag() == 0.0 && z.real() >= 1.0) return {z, Side::plus};
  return {z, Side::interior};
}

EvalResult hyp2f1_series(const HypParams& p, Complex z) {
  validate_params(p);
  if (std::abs(z) > 0.75)
    throw DomainError("hyp2f1_series: requires |z| <= 0.75");
  return to_result(series_kernel(p.a, p.b, p.c, z));
}

EvalResult hyp2f1_log_connection(double a, double b, Complex z) {
  if (!(a > 0.0) || !(b > 0.0))
    throw ParameterError("hyp2f1_log_connection: requires a, b > 0");
  if (z.imag() == 0.0 && z.real() >= 1.0)
    throw DomainError("hyp2f1_log_connection: z must lie off [1,inf)");
  if (std::abs(1.0 - z) > 0.75)
    throw DomainError("hyp2f1_log_connection: requires |1-z| <= 0.75");
  return to_result(log_case_kernel(a, b, 1.0 - z, 0));
}

EvalResult hyp2f1_cut(const HypParams& p, double x, Side side) {
  validate_params(p);
  if (!is_k_family(p))
    throw ParameterError("hyp2f1_cut: parameters must be (a, 1-a; 1)");
  if (side == Side::interior)
    throw CutSideError("hyp2f1_cut: side must be plus or minus");
  if (!(x > 0.0) || !std::isfinite(x))
    throw DomainError("hyp2f1_cut: requires x > 0 (the point is z = 1+x)");
  return to_result(
      cut_split_kernel(p.a, Complex(1.0 + x, 0.0), side == Side::plus ? 1 : -1));
}

EvalResult hyp2f1(const HypParams& p, const CutPoint& pt) {
  validate_params(p);
  if (pt.on_the_cut()) {
    if (pt.z.imag() != 0.0 || pt.z.real() < 1.0)
      throw CutSideError("hyp2f1: side tag on a point off the cut");
    return to_result(eval_on_cut(p, pt.z.real(), pt.side));
  }
  if (pt.z.imag() == 0.0 && pt.z.real() >= 1.0)
    throw CutSideError("hyp2f1: point on [1,inf) requires a side tag");
  return to_result(eval_interior(p.a, p.b, p.c, pt.z, true));
}

namespace detail {

EvalResult hyp2f1_near_one(const HypParams& p, Complex one_minus_z) {
  validate_params(p);
  if (std::abs(one_minus_z) > 0.75)
    throw DomainError("hyp2f1_near_one: requires |1-z| <= 0.75");
  if (one_minus_z.imag() == 0.0 && one_minus_z.real() <= 0.0)
    throw CutSideError("hyp2f1_near_one: 1-z on (-inf,0] means z on the "
                       "cut; use a side-tagged evaluation");
  return to_result(connection_kernel(p.a, p.b, p.c, one_minus_z, 0));
}

}  // namespace detail

double reflection_identity_residual(double a, double x) {
  if (!(a > 0.0 && a < 1.0))
    throw ParameterError("reflection_identity_residual: a must be in (0,1)");
  if (!(x > 0.0 && x < 1.0))
    throw DomainError("reflection_identity_residual: x must be in (0,1)");
  const double ga =
      std::exp(log_gamma(a) - log_gamma(2.0 * a) - log_gamma(1.0 - a));
  const double gb = std::exp(log_gamma(1.0 - a) - log_gamma(2.0 - 2.0 * a) -
                             log_gamma(a));
  const Complex omx(1.0 - x, 0.0), xx(x, 0.0);
  const Complex f_2a = eval_interior(a, a, 2.0 * a, omx, true).value;
  const Complex f_2b =
      eval_interior(1.0 - a, 1.0 - a, 2.0 - 2.0 * a, omx, true).value;
  const Complex f_1a = eval_interior(a, a, 1.0, xx, true).value;
  const Complex f_1b = eval_interior(1.0 - a, 1.0 - a, 1.0, xx, true).value;
  const double t1 = ga * f_2a.real() * f_1b.real();
  const double t2 = gb * f_2b.real() * f_1a.real();
  const double t3 =
      2.0 * std::cos(kPi * a) * f_1a.real() * f_1b.real();
  const double scale =
      std::max({std::fabs(t1), std::fabs(t2), std::fabs(t3), 1e-300});
  return (t1 - t2 - t3) / scale;
}

}  // namespace conemet
