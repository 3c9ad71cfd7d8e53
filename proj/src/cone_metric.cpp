#include "conemet/cone_metric.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "conemet/errors.hpp"
#include "conemet/gamma_kernel.hpp"

namespace conemet {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kLog2 = 0.69314718055994530941723212145817657;

void require_off_punctures(Complex z, const char* who) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw DomainError(std::string(who) + ": non-finite point");
  if (z == Complex(0.0, 0.0))
    throw SingularPointError(std::string(who) + ": singular point z=0");
  if (z == Complex(1.0, 0.0))
    throw SingularPointError(std::string(who) + ": singular point z=1");
}

struct ReKK {
  double value;
  Method method;
  double err;
  int terms;
};

// Re( K_a(z) K_a(1 - conj z) ) with the ray cases resolved by side limits.
// On (-inf,0) and (1,inf) exactly one factor sits on the cut; its two side
// values are conjugate, so the real part of the product is side
// independent.  Both sides are evaluated, compared, and averaged.
ReKK re_kk(const SignatureParam& s, Complex z) {
  const bool on_neg_ray = z.imag() == 0.0 && z.real() < 0.0;
  const bool on_far_ray = z.imag() == 0.0 && z.real() > 1.0;
  if (on_neg_ray || on_far_ray) {
    const double interior_arg = on_neg_ray ? z.real() : 1.0 - z.real();
    const double cut_arg = on_neg_ray ? 1.0 - z.real() : z.real();
    const EvalResult in =
        elliptic_k(s, CutPoint::interior(Complex(interior_arg, 0.0)));
    const EvalResult plus =
        elliptic_k(s, CutPoint::on_cut(cut_arg, Side::plus));
    const EvalResult minus =
        elliptic_k(s, CutPoint::on_cut(cut_arg, Side::minus));
    const double rp = (in.value * plus.value).real();
    const double rm = (in.value * minus.value).real();
    const double scale = std::max(std::fabs(rp), std::fabs(rm));
    if (std::fabs(rp - rm) > 1e-11 * scale)
      throw NoConvergenceError("rho: side limits of Re(K K) disagree");
    ReKK r;
    r.value = 0.5 * (rp + rm);
    r.method = in.method;
    r.err = in.est_rel_err + plus.est_rel_err + minus.est_rel_err;
    r.terms = in.terms_used + plus.terms_used + minus.terms_used;
    return r;
  }
  const EvalResult kz = elliptic_k(s, CutPoint::interior(z));
  // near the origin, hand the complementary argument over as
  // 1 - (1 - conj z) = conj z exactly; forming 1 - conj z loses all
  // relative precision once |z| drops toward the epsilon scale
  const bool near_origin =
      std::abs(z) < 0.3 && !(z.imag() == 0.0 && z.real() < 0.0);
  EvalResult kw =
      near_origin
          ? detail::hyp2f1_near_one({s.a, 1.0 - s.a, 1.0}, std::conj(z))
          : elliptic_k(s, CutPoint::interior(1.0 - std::conj(z)));
  if (near_origin) kw.value *= kPi / 2.0;
  ReKK r;
  r.value = (kz.value * kw.value).real();
  r.method = kz.method;
  r.err = kz.est_rel_err + kw.est_rel_err;
  r.terms = kz.terms_used + kw.terms_used;
  return r;
}

}  // namespace

DensityResult rho_density(const SignatureParam& s, Complex z) {
  require_off_punctures(z, "rho");
  const ReKK kk = re_kk(s, z);
  const double denom = 8.0 * std::abs(z * (1.0 - z)) * kk.value;
  if (!(denom > 0.0))
    throw DivergenceError("rho: denominator Re(K K) not positive");
  DensityResult r;
  r.value = kPi * std::cos(0.5 * kPi * s.alpha) / denom;
  r.method = kk.method;
  r.est_rel_err = kk.err + 4e-16;
  r.terms_used = kk.terms;
  return r;
}

double rho(const SignatureParam& s, Complex z) {
  return rho_density(s, z).value;
}

double rho_half(const SignatureParam& s) {
  const double gp = gamma(0.25 * (1.0 + s.alpha));
  const double gm = gamma(0.25 * (1.0 - s.alpha));
  return 8.0 * kPi * kPi /
         (gp * gp * gm * gm * std::cos(0.5 * kPi * s.alpha));
}

Complex triangle_map(const SignatureParam& s, Complex z) {
  require_off_punctures(z, "triangle_map");
  if (z.imag() < 0.0)
    throw DomainError("triangle_map: defined on the closed upper half "
                      "plane; conjugate the input");
  const CutPoint num_pt = z.imag() == 0.0
                              ? (z.real() < 0.0
                                     ? CutPoint::on_cut(1.0 - z.real(), Side::minus)
                                     : CutPoint::interior(1.0 - z))
                              : CutPoint::interior(1.0 - z);
  const CutPoint den_pt = CutPoint::upper_limit(z);
  const Complex num = elliptic_k(s, num_pt).value;
  const Complex den = elliptic_k(s, den_pt).value;
  return Complex(0.0, 1.0) * num / den;
}

Complex triangle_map_deriv(const SignatureParam& s, Complex z) {
  require_off_punctures(z, "triangle_map_deriv");
  if (z.imag() < 0.0)
    throw DomainError("triangle_map_deriv: defined on the closed upper "
                      "half plane");
  const Complex k = elliptic_k(s, CutPoint::upper_limit(z)).value;
  return Complex(0.0, -1.0) * kPi * std::sin(kPi * s.a) /
         (4.0 * z * (1.0 - z) * k * k);
}

bool in_triangle_closure(const SignatureParam& s, Complex w, double slack) {
  const double sa = std::sin(kPi * s.a);
  if (w.imag() < -slack) return false;
  if (w.real() < -slack || w.real() > sa + slack) return false;
  return std::abs(2.0 * w * sa - 1.0) >= 1.0 - slack;
}

AsymptoticConstants asymptotic_constants(const SignatureParam& s) {
  AsymptoticConstants c;
  c.c0 = -kLog2;
  c.c1 = -kLog2;
  c.exponent_inf = -(1.0 + s.alpha);
  c.cusp_at_infinity = s.alpha == 0.0;
  if (!c.cusp_at_infinity) {
    const double gp = gamma(0.5 * (1.0 + s.alpha));
    const double gm = gamma(0.5 * (1.0 - s.alpha));
    c.c_inf = std::log(gp * gp * gamma(1.0 - s.alpha) /
                       (gm * gm * gamma(s.alpha)));
  }
  return c;
}

double pushforward_density(const SignatureParam& s, Complex z) {
  require_off_punctures(z, "pushforward_density");
  const double n2 = std::norm(z);
  return rho(s, 1.0 / z) / n2;
}

double domain_lower_bound(const std::vector<Complex>& boundary,
                          const SignatureParam& s, Complex z) {
  std::vector<Complex> pts;
  for (const Complex& w : boundary) {
    if (std::find(pts.begin(), pts.end(), w) == pts.end()) pts.push_back(w);
    if (w == z)
      throw DomainError("domain_lower_bound: z coincides with a boundary "
                        "sample");
  }
  if (pts.size() < 2)
    throw DomainError("domain_lower_bound: need at least 2 distinct "
                      "boundary points");
  double best = 0.0;
  for (const Complex& w0 : pts) {
    for (const Complex& w1 : pts) {
      if (w0 == w1) continue;
      const Complex arg = (z - w0) / (w1 - w0);
      best = std::max(best, rho(s, arg) / std::abs(w1 - w0));
    }
  }
  return best;
}

bool theta_monotone_scan(const SignatureParam& s, double r, int n) {
  if (!(r > 0.0) || n < 3)
    throw DomainError("theta_monotone_scan: need r > 0 and n >= 3");
  std::vector<double> vals(n);
  double scale = 0.0;
  for (int k = 1; k <= n; ++k) {
    const double th = k * kPi / (n + 1.0);
    vals[k - 1] = rho(s, Complex(r * std::cos(th), r * std::sin(th)));
    scale = std::max(scale, vals[k - 1]);
  }
  for (int k = 1; k < n; ++k)
    if (vals[k] > vals[k - 1] + 1e-12 * scale) return false;
  return true;
}

bool alpha_monotone_scan(Complex z, const std::vector<double>& alphas) {
  if (alphas.empty()) throw DomainError("alpha_monotone_scan: empty list");
  for (size_t i = 1; i < alphas.size(); ++i)
    if (alphas[i] < alphas[i - 1])
      throw DomainError("alpha_monotone_scan: list must be ascending");
  std::vector<double> vals;
  vals.reserve(alphas.size());
  double scale = 0.0;
  for (double alpha : alphas) {
    vals.push_back(rho(SignatureParam::from_alpha(alpha), z));
    scale = std::max(scale, vals.back());
  }
  for (size_t i = 1; i < vals.size(); ++i)
    if (vals[i] > vals[i - 1] + 1e-12 * scale) return false;
  return true;
}

}  // namespace conemet
