#include "conemet/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <ostream>
#include <random>

#include "conemet/cone_metric.hpp"
#include "conemet/distance.hpp"
#include "conemet/elliptic.hpp"
#include "conemet/errors.hpp"
#include "conemet/gamma_kernel.hpp"
#include "conemet/hyp2f1.hpp"
#include "conemet/oracle.hpp"

namespace conemet::verify {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[192];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

CheckResult finish(const char* name, const Timer& t, bool passed,
                   std::string detail) {
  return {name, passed, std::move(detail), t.seconds()};
}

// Margin from the method-region boundaries of the dispatcher, for both
// K arguments z and 1 - conj z.  Finite-difference stencils must not
// straddle a boundary, or the evaluation errors stop cancelling.
double region_margin(Complex z) {
  double m = 1e9;
  for (Complex w : {z, 1.0 - std::conj(z)}) {
    const double az = std::abs(w);
    const double a1 = std::abs(1.0 - w);
    m = std::min(m, std::fabs(az - 0.75));
    if (az > 0.7) m = std::min(m, std::fabs(w.real() - 0.5));
    m = std::min(m, std::fabs(a1 - 0.96));
    m = std::min(m, std::fabs(az - 0.96 * a1));
    m = std::min(m, std::fabs(std::abs(1.0 - w) - 0.94 * az));
    if (az > 0.5) {
      const double g = std::max(std::abs(1.0 / w), std::abs(1.0 - 1.0 / w));
      m = std::min(m, std::fabs(g - 0.92));
    }
  }
  return m;
}

}  // namespace

CheckResult check_special_values(Level) {
  Timer t;
  double worst = 0.0;
  for (int i = 1; i <= 9; ++i) {
    const double a = 0.1 * i;
    const SignatureParam s = SignatureParam::from_a(a);
    const double closed = gamma(0.5 * (1.0 - a)) * gamma(0.5 * a) *
                          std::sin(kPi * a) / (4.0 * std::sqrt(kPi));
    const double got =
        elliptic_k(s, CutPoint::interior(Complex(0.5, 0.0))).value.real();
    worst = std::max(worst, std::fabs(got - closed) / closed);
  }
  for (double alpha : {0.0, 0.25, 0.5, 0.75, 0.9}) {
    const SignatureParam s = SignatureParam::from_alpha(alpha);
    const double closed = rho_half(s);
    const double got = rho(s, Complex(0.5, 0.0));
    worst = std::max(worst, std::fabs(got - closed) / closed);
  }
  return finish("special-values", t, worst <= 1e-11,
                fmt("max rel err %.3e (tol 1e-11)", worst));
}

CheckResult check_elliott(Level level) {
  Timer t;
  const int n = level == Level::full ? 20 : 6;
  const std::vector<double> avals =
      level == Level::full ? std::vector<double>{0.1, 0.25, 0.5, 0.75, 0.9}
                           : std::vector<double>{0.25, 0.5, 0.9};
  double worst = 0.0;
  int count = 0;
  for (double a : avals) {
    const SignatureParam s = SignatureParam::from_a(a);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const double re = -0.8 + 1.7 * i / (n - 1.0);
        const double im = -0.9 + 1.8 * j / (n - 1.0);
        if (im == 0.0 && (re <= 0.0 || re >= 1.0)) continue;
        worst = std::max(worst, elliott_residual(s, Complex(re, im)));
        ++count;
      }
    }
  }
  return finish("elliott-identity", t, worst <= 1e-10,
                fmt("max residual %.3e over %g points (tol 1e-10)", worst,
                    static_cast<double>(count)));
}

CheckResult check_reflection_identity(Level level) {
  Timer t;
  const int n = level == Level::full ? 50 : 10;
  // golden-ratio sequence over (a, x); keeps a away from the immediate
  // vicinity of 1/2 where the power-connection coefficients blow up
  double worst = 0.0;
  const double inv_phi = 0.6180339887498949;
  const double inv_phi2 = 0.3819660112501051;
  int produced = 0, k = 0;
  while (produced < n) {
    ++k;
    double a = 0.06 + 0.88 * std::fmod(0.5 + k * inv_phi, 1.0);
    const double x = 0.04 + 0.92 * std::fmod(0.5 + k * inv_phi2, 1.0);
    if (std::fabs(a - 0.5) < 0.01) a = 0.5;
    worst = std::max(worst, std::fabs(reflection_identity_residual(a, x)));
    ++produced;
  }
  return finish("reflection-identity", t, worst <= 1e-10,
                fmt("max residual %.3e over %g samples (tol 1e-10)", worst,
                    static_cast<double>(n)));
}

CheckResult check_triangle_map(Level level) {
  Timer t;
  const int n_contain = level == Level::full ? 500 : 60;
  const int n_axis = level == Level::full ? 20 : 5;
  std::mt19937_64 rng(20240517u);
  std::uniform_real_distribution<double> ure(-3.0, 4.0);
  std::uniform_real_distribution<double> uim(1e-3, 3.0);
  std::uniform_real_distribution<double> ua(0.08, 0.92);
  int outside = 0;
  for (int i = 0; i < n_contain; ++i) {
    const SignatureParam s = SignatureParam::from_a(ua(rng));
    const Complex z(ure(rng), uim(rng));
    if (!in_triangle_closure(s, triangle_map(s, z), 1e-9)) ++outside;
  }
  double worst = 0.0;
  for (double a : {0.25, 0.4, 0.7}) {
    const SignatureParam s = SignatureParam::from_a(a);
    const double target = std::sin(kPi * a);
    for (int i = 0; i < n_axis; ++i) {
      const double x = std::pow(10.0, -2.0 + 4.0 * i / (n_axis - 1.0));
      const Complex w = triangle_map(s, Complex(-x, 0.0));
      worst = std::max(worst, std::fabs(w.real() - target));
    }
  }
  const bool ok = outside == 0 && worst <= 1e-10;
  return finish("triangle-map", t, ok,
                fmt("points outside closure: %g; max |Re f - sin(pi a)| "
                    "%.3e (tol 1e-10)",
                    static_cast<double>(outside), worst));
}

CheckResult check_curvature(Level level) {
  Timer t;
  const int per_alpha = level == Level::full ? 25 : 3;
  const double h = 1e-3;
  std::mt19937_64 rng(911003u);
  std::uniform_real_distribution<double> ure(-0.75, 1.75);
  std::uniform_real_distribution<double> uim(-0.9, 0.9);
  double worst = 0.0;
  // The 5-point Laplacian carries a truncation term h^2/12 (f_xxxx+f_yyyy)
  // with f = log rho.  The fourth derivative keeps O(1/d^4) structure from
  // the punctures while 4 rho^2 shrinks with alpha, so a point qualifies
  // for tolerance 1e-4 at h = 1e-3 only when the (coarsely estimated)
  // truncation sits safely below it.  Large alpha leaves no such region.
  for (double alpha : {0.0, 0.2, 0.4, 0.6}) {
    const SignatureParam s = SignatureParam::from_alpha(alpha);
    int done = 0;
    while (done < per_alpha) {
      const Complex z(ure(rng), uim(rng));
      if (std::min(std::abs(z), std::abs(z - 1.0)) < 0.3) continue;
      bool clear = true;
      for (Complex d : {Complex(0, 0), Complex(h, 0), Complex(-h, 0),
                        Complex(0, h), Complex(0, -h)}) {
        if (region_margin(z + d) < 0.02) {
          clear = false;
          break;
        }
      }
      if (!clear) continue;
      const double rc = rho(s, z);
      if (rc < 0.05) continue;  // keep the FD signal above rounding noise
      const auto lrho = [&](Complex p) { return std::log(rho(s, p)); };
      // fourth-difference screen at a coarse step
      const double hc = 0.04;
      double f4 = 0.0;
      for (Complex e : {Complex(hc, 0.0), Complex(0.0, hc)}) {
        f4 += std::fabs(lrho(z - 2.0 * e) - 4.0 * lrho(z - e) +
                        6.0 * lrho(z) - 4.0 * lrho(z + e) +
                        lrho(z + 2.0 * e)) /
              (hc * hc * hc * hc);
      }
      if (h * h / 12.0 * f4 > 2.5e-5 * 4.0 * rc * rc) continue;
      const double lap = (lrho(z + h) + lrho(z - h) +
                          lrho(z + Complex(0, h)) + lrho(z - Complex(0, h)) -
                          4.0 * std::log(rc)) /
                         (h * h);
      worst = std::max(worst, std::fabs(lap - 4.0 * rc * rc) /
                                  (4.0 * rc * rc));
      ++done;
    }
  }
  return finish("curvature", t, worst <= 1e-4,
                fmt("max rel defect of (lap log rho)/(4 rho^2) = %.3e "
                    "(tol 1e-4, h=1e-3, 4 alphas x %g pts)",
                    worst, static_cast<double>(per_alpha)));
}

CheckResult check_axis_distance(Level level) {
  Timer t;
  const std::vector<std::pair<double, double>> pairs_full = {
      {0.2, 0.7}, {0.5, 4.0}, {1.0, 10.0}, {0.05, 0.3}, {2.0, 3.0},
      {0.8, 1.2}, {3.0, 9.0}, {0.4, 0.9},  {1.5, 6.0},  {0.25, 2.5}};
  const std::vector<std::pair<double, double>> pairs_quick = {
      {0.5, 4.0}, {1.0, 10.0}, {0.25, 2.5}};
  const auto& pairs = level == Level::full ? pairs_full : pairs_quick;
  double worst = 0.0;
  for (double a : {0.25, 0.5, 0.75}) {
    const SignatureParam s = SignatureParam::from_a(a);
    for (auto [x, y] : pairs) {
      const double fast = axis_distance(s, x, y);
      const double slow = quad_axis_distance(s, x, y);
      worst = std::max(worst, std::fabs(fast - slow));
    }
  }
  double worst_inf = 0.0;
  for (double a : {0.1, 0.25, 0.4}) {
    const SignatureParam s = SignatureParam::from_a(a);
    const double got = axis_potential(s, AxisPoint::infinity());
    const double expect = -0.5 * std::log(std::cos(kPi * a));
    worst_inf = std::max(worst_inf, std::fabs(got - expect));
  }
  const bool ok = worst <= 1e-9 && worst_inf <= 1e-13;
  return finish("axis-distance", t, ok,
                fmt("max |Phi diff - quadrature| %.3e (tol 1e-9); "
                    "Phi(inf) defect %.3e (tol 1e-13)",
                    worst, worst_inf));
}

CheckResult check_asymptotics_infinity(Level) {
  Timer t;
  const double x = 1e8;
  double lo = 2.0, hi = 0.0;
  for (double alpha : {0.25, 0.5, 0.75}) {
    const SignatureParam s = SignatureParam::from_alpha(alpha);
    const double cinf = *asymptotic_constants(s).c_inf;
    const double ratio =
        rho(s, Complex(-x, 0.0)) * std::pow(x, 1.0 + alpha) / std::exp(cinf);
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  const bool ok = lo >= 0.99 && hi <= 1.01;
  return finish("asymptotics-infinity", t, ok,
                fmt("rho(-x) x^(1+alpha) / exp(c_inf) in [%.6f, %.6f] at "
                    "x=1e8 (need [0.99, 1.01])",
                    lo, hi));
}

CheckResult check_asymptotics_origin(Level level) {
  Timer t;
  const double r = level == Level::full ? 1e-8 : 1e-200;
  const double L = std::log(1.0 / r);
  double worst = 0.0;
  // on the negative ray the complementary argument 1+|z| is representable
  // only for |z| above the epsilon scale, so the deep probe stays off it
  const std::vector<Complex> dirs =
      level == Level::full
          ? std::vector<Complex>{{1, 0}, {0, 1}, {-1, 0}}
          : std::vector<Complex>{{1, 0}, {0, 1}};
  for (double alpha : {0.25, 0.5, 0.75}) {
    const SignatureParam s = SignatureParam::from_alpha(alpha);
    for (Complex dir : dirs) {
      const Complex z = r * dir;
      const double disc = std::log(rho(s, z)) + std::log(r) + std::log(L) +
                          std::log(2.0);
      worst = std::max(worst, std::fabs(disc));
    }
  }
  return finish("asymptotics-origin", t, worst <= 0.02,
                fmt("max |log rho + log|z| + log log(1/|z|) + log 2| = %.4f "
                    "at |z|=%.0e (tol 0.02); the tail decays like "
                    "(2 psi(1)-psi(a)-psi(1-a))/log(1/|z|)",
                    worst, r));
}

CheckResult check_monotonicity_theta(Level level) {
  Timer t;
  const int n = level == Level::full ? 50 : 15;
  bool ok = true;
  for (double alpha : {0.0, 0.6}) {
    const SignatureParam s = SignatureParam::from_alpha(alpha);
    for (double r : {0.7, 2.0}) {
      ok = ok && theta_monotone_scan(s, r, n);
      // consequence: rho(-r) <= rho(z) <= rho(r) on |z| = r
      const double lo = rho(s, Complex(-r, 0.0));
      const double hi = rho(s, Complex(r, 0.0));
      for (int k = 1; k <= 12; ++k) {
        const double th = k * kPi / 13.0;
        const double v = rho(s, Complex(r * std::cos(th), r * std::sin(th)));
        const double scale = std::max(hi, v);
        if (v > hi + 1e-12 * scale || v < lo - 1e-12 * scale) ok = false;
      }
    }
  }
  return finish("monotonicity-theta", t, ok,
                fmt("theta scans (n=%g) and radial sandwich",
                    static_cast<double>(n)));
}

CheckResult check_monotonicity_alpha(Level) {
  Timer t;
  bool ok = alpha_monotone_scan(Complex(0.5, 0.0), {0.0, 0.25, 0.5, 0.75});
  std::vector<double> grid;
  for (int i = 0; i < 10; ++i) grid.push_back(0.1 * i);
  ok = ok && alpha_monotone_scan(Complex(-3.0, 0.0), grid);
  ok = ok && alpha_monotone_scan(Complex(0.3, 0.4), grid);
  return finish("monotonicity-alpha", t, ok, "alpha scans non-increasing");
}

CheckResult check_lower_bound(Level level) {
  Timer t;
  const int n = level == Level::full ? 200 : 30;
  std::mt19937_64 rng(771201u);
  std::uniform_real_distribution<double> ure(-2.5, 3.5);
  std::uniform_real_distribution<double> uim(-2.0, 2.0);
  const double alphas[5] = {0.1, 0.3, 0.5, 0.7, 0.9};
  double worst = -1e9;
  int done = 0, idx = 0;
  while (done < n) {
    Complex z1(ure(rng), uim(rng));
    Complex z2(ure(rng), uim(rng));
    if (std::min(std::abs(z1), std::abs(z1 - 1.0)) < 0.1) continue;
    if (std::min(std::abs(z2), std::abs(z2 - 1.0)) < 0.1) continue;
    if (std::abs(z1) > std::abs(z2)) std::swap(z1, z2);
    if (std::abs(z1) == std::abs(z2)) continue;
    const SignatureParam s = SignatureParam::from_alpha(alphas[idx++ % 5]);
    const double bound = radial_lower_bound(s, z1, z2);
    const double dist = geodesic_distance(s, z1, z2);
    worst = std::max(worst, bound - dist);
    ++done;
  }
  return finish("distance-lower-bound", t, worst <= 1e-10,
                fmt("max (bound - distance) = %.3e over %g pairs "
                    "(tol 1e-10)",
                    worst, static_cast<double>(n)));
}

CheckResult check_oracle_agreement(Level level) {
  Timer t;
  const int nz = level == Level::full ? 34 : 4;
  double worst = 0.0;
  for (double a : {0.2, 0.5, 0.8}) {
    const SignatureParam s = SignatureParam::from_a(a);
    for (int i = 0; i < nz; ++i) {
      const double x = -4.95 + (0.95 - (-4.95)) * i / (nz - 1.0);
      const CutPoint pt = CutPoint::interior(Complex(x, 0.0));
      const double kf = elliptic_k(s, pt).value.real();
      const double ks = quad_elliptic_k(s, x);
      const double ef = elliptic_e(s, pt).value.real();
      const double es = quad_elliptic_e(s, x);
      worst = std::max(worst, std::fabs(kf - ks) / std::fabs(ks));
      worst = std::max(worst, std::fabs(ef - es) / std::fabs(es));
    }
  }
  return finish("oracle-agreement", t, worst <= 1e-9,
                fmt("max rel deviation %.3e over %g points x 3 signatures "
                    "(tol 1e-9)",
                    worst, static_cast<double>(2 * nz)));
}

std::vector<CheckResult> run_all(Level level, std::ostream* out) {
  using Fn = CheckResult (*)(Level);
  const Fn checks[] = {
      check_special_values,   check_elliott,
      check_reflection_identity, check_triangle_map,
      check_curvature,        check_axis_distance,
      check_asymptotics_infinity, check_asymptotics_origin,
      check_monotonicity_theta,   check_monotonicity_alpha,
      check_lower_bound,      check_oracle_agreement,
  };
  std::vector<CheckResult> results;
  for (Fn fn : checks) {
    CheckResult r = fn(level);
    if (out) {
      char line[320];
      std::snprintf(line, sizeof line, "[%s] %-22s %7.2fs  %s\n",
                    r.passed ? " ok " : "FAIL", r.name.c_str(), r.seconds,
                    r.detail.c_str());
      (*out) << line << std::flush;
    }
    results.push_back(std::move(r));
  }
  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.passed; });
}

}  // namespace conemet::verify
