#include <cmath>
#include <complex>
#include <random>

#include <doctest.h>

#include "conemet/cone_metric.hpp"
#include "conemet/errors.hpp"

using namespace conemet;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

double rel(double got, double want) {
  return std::fabs(got - want) / std::fabs(want);
}

const SignatureParam kA0 = SignatureParam::from_alpha(0.0);
const SignatureParam kA25 = SignatureParam::from_alpha(0.25);
const SignatureParam kA50 = SignatureParam::from_alpha(0.5);
}  // namespace

TEST_CASE("rho: closed form at z = 1/2") {
  // alpha = 0: 8 pi^2 / Gamma(1/4)^4
  CHECK(rel(rho(kA0, {0.5, 0.0}), 0.4569465810444636254) <= 1e-12);
  // alpha = 1/2: 8 pi^2 / (Gamma(3/8)^2 Gamma(1/8)^2 cos(pi/4))
  CHECK(rel(rho(kA50, {0.5, 0.0}), 0.3501093390529957669) <= 1e-12);
}

TEST_CASE("rho: complex-point anchor value") {
  // 30-digit reference; catches global-factor regressions the symmetry
  // tests cannot see
  const SignatureParam s = SignatureParam::from_alpha(0.3);
  CHECK(rel(rho(s, {0.3, 0.4}), 0.2980010674013966322) <= 1e-13);
}

TEST_CASE("rho: symmetries") {
  for (const SignatureParam& s : {kA0, kA25, kA50}) {
    const double v = rho(s, {0.3, 0.2});
    CHECK(rel(rho(s, {0.7, -0.2}), v) <= 1e-12);  // z -> 1-z
    CHECK(rel(rho(s, {0.3, -0.2}), v) <= 1e-12);  // z -> conj z
  }
}

TEST_CASE("rho: representative invariance a vs 1-a") {
  const SignatureParam s1 = SignatureParam::from_a(0.2);
  const SignatureParam s2 = SignatureParam::from_a(0.8);
  for (Complex z : {Complex(0.5, 0.0), Complex(-1.0, 0.5), Complex(2.0, 1.0),
                    Complex(0.1, -0.7)}) {
    CHECK(rel(rho(s1, z), rho(s2, z)) <= 1e-12);
  }
}

TEST_CASE("rho: on the rays the side limits agree and the value is finite") {
  for (const SignatureParam& s : {kA0, kA50}) {
    const double v1 = rho(s, {-2.0, 0.0});
    const double v2 = rho(s, {3.0, 0.0});
    CHECK(v1 > 0.0);
    CHECK(v2 > 0.0);
    // continuity across the ray
    CHECK(rel(rho(s, {-2.0, 1e-9}), v1) <= 1e-6);
    CHECK(rel(rho(s, {3.0, -1e-9}), v2) <= 1e-6);
    // symmetry z -> 1-z maps the two rays onto each other
    CHECK(rel(rho(s, {1.0 - 3.0, 0.0}), v2) <= 1e-12);
  }
}

TEST_CASE("rho: singular points") {
  CHECK_THROWS_AS(rho(kA0, {0.0, 0.0}), SingularPointError);
  CHECK_THROWS_AS(rho(kA0, {1.0, 0.0}), SingularPointError);
}

TEST_CASE("rho_half: closed form against the general path") {
  for (double alpha : {0.0, 0.25, 0.5, 0.75, 0.9}) {
    const SignatureParam s = SignatureParam::from_alpha(alpha);
    CHECK(rel(rho(s, {0.5, 0.0}), rho_half(s)) <= 1e-11);
  }
  // alpha -> 1: the density collapses; cross-check agreement survives
  const SignatureParam s999 = SignatureParam::from_alpha(0.999);
  CHECK(rel(rho(s999, {0.5, 0.0}), rho_half(s999)) <= 1e-9);
  // monotone decrease toward the degenerate limit
  double prev = rho_half(SignatureParam::from_alpha(0.9));
  for (double alpha : {0.99, 0.999}) {
    const double cur = rho_half(SignatureParam::from_alpha(alpha));
    CHECK(cur < prev);
    prev = cur;
  }
}

TEST_CASE("triangle map: interval images") {
  // (0,1) maps onto the positive imaginary axis
  for (double x : {0.1, 0.5, 0.9}) {
    const Complex w = triangle_map(kA50, {x, 0.0});
    CHECK(std::fabs(w.real()) <= 1e-14);
    CHECK(w.imag() > 0.0);
  }
  // f(1/2) = i
  const Complex wm = triangle_map(kA25, {0.5, 0.0});
  CHECK(std::abs(wm - Complex(0.0, 1.0)) <= 1e-13);
  // (-inf, 0) maps onto the vertical line Re w = sin(pi a)
  const SignatureParam s = SignatureParam::from_a(0.25);
  for (double x : {0.1, 1.0, 10.0}) {
    const Complex w = triangle_map(s, {-x, 0.0});
    CHECK(std::fabs(w.real() - std::sin(kPi * 0.25)) <= 1e-10);
  }
  CHECK_THROWS_AS(triangle_map(kA50, {0.3, -0.2}), DomainError);
  CHECK_THROWS_AS(triangle_map(kA50, {1.0, 0.0}), SingularPointError);
}

TEST_CASE("triangle map: containment in the closed triangle") {
  std::mt19937_64 rng(1234u);
  std::uniform_real_distribution<double> ure(-3.0, 4.0);
  std::uniform_real_distribution<double> uim(1e-3, 3.0);
  std::uniform_real_distribution<double> ua(0.1, 0.9);
  for (int i = 0; i < 200; ++i) {
    const SignatureParam s = SignatureParam::from_a(ua(rng));
    const Complex w = triangle_map(s, {ure(rng), uim(rng)});
    CHECK(in_triangle_closure(s, w, 1e-9));
  }
}

TEST_CASE("triangle map derivative") {
  // closed form at z = 1/2, a = 1/2: f' = -i pi / K(1/2)^2
  const Complex d = triangle_map_deriv(kA0, {0.5, 0.0});
  CHECK(std::fabs(d.real()) <= 1e-13);
  CHECK(std::fabs(d.imag() + 0.9138931620889272507) <= 1e-12);
  // finite differences at an interior point
  const SignatureParam s = SignatureParam::from_a(0.3);
  const Complex z(0.3, 0.3);
  const double h = 1e-6;
  const Complex fd = (triangle_map(s, z + h) - triangle_map(s, z - h)) /
                     (2.0 * h);
  CHECK(std::abs(triangle_map_deriv(s, z) - fd) <=
        1e-7 * std::abs(fd));
  // density from the map: |f'| / (2 Im f) = rho
  const Complex z2(0.25, 0.6);
  const Complex f = triangle_map(s, z2);
  const Complex fp = triangle_map_deriv(s, z2);
  CHECK(rel(std::abs(fp) / (2.0 * f.imag()), rho(s, z2)) <= 1e-10);
}

TEST_CASE("asymptotic constants") {
  const AsymptoticConstants c = asymptotic_constants(kA50);
  CHECK(c.c0 == doctest::Approx(-std::log(2.0)).epsilon(1e-15));
  CHECK(c.c1 == c.c0);
  CHECK(c.exponent_inf == doctest::Approx(-1.5));
  CHECK(!c.cusp_at_infinity);
  // c_inf(1/2) = 2 log(Gamma(3/4)/Gamma(1/4))
  CHECK(*c.c_inf == doctest::Approx(-2.169483146533564172).epsilon(1e-13));
  const AsymptoticConstants c0 = asymptotic_constants(kA0);
  CHECK(c0.cusp_at_infinity);
  CHECK(!c0.c_inf.has_value());
  CHECK(c0.exponent_inf == doctest::Approx(-1.0));
}

TEST_CASE("asymptotic law near the origin and at infinity") {
  // |z| = 1e-8: log rho + log|z| + log log(1/|z|) sits below -log 2 by the
  // tail (2 psi(1) - psi(a) - psi(1-a))/log(1/|z|), about 0.15-0.36 here;
  // at |z| = 1e-200 the tail drops under 0.02
  const double r8 = 1e-8;
  const double disc8 = std::log(rho(kA25, {0.0, r8})) + std::log(r8) +
                       std::log(std::log(1.0 / r8)) + std::log(2.0);
  CHECK(disc8 < 0.0);
  CHECK(std::fabs(disc8) > 0.1);   // the law converges too slowly for 1e-8
  CHECK(std::fabs(disc8) < 0.45);
  const double rd = 1e-200;
  for (const SignatureParam& s : {kA25, kA50}) {
    const double disc = std::log(rho(s, {rd, 0.0})) + std::log(rd) +
                        std::log(std::log(1.0 / rd)) + std::log(2.0);
    CHECK(std::fabs(disc) <= 0.02);
  }
  // at infinity: rho(-x) x^{1+alpha} -> exp(c_inf)
  for (double alpha : {0.25, 0.5, 0.75}) {
    const SignatureParam s = SignatureParam::from_alpha(alpha);
    const double x = 1e8;
    const double ratio = rho(s, {-x, 0.0}) * std::pow(x, 1.0 + alpha) /
                         std::exp(*asymptotic_constants(s).c_inf);
    CHECK(std::fabs(ratio - 1.0) <= 0.01);
  }
}

TEST_CASE("joint continuity in (alpha, z) on a compact patch") {
  const double d = 1e-7;
  for (double alpha : {1e-4, 0.3, 0.8}) {
    for (Complex z : {Complex(0.4, 0.3), Complex(-0.7, 0.1)}) {
      const double base = rho(SignatureParam::from_alpha(alpha), z);
      const double da =
          rho(SignatureParam::from_alpha(alpha + d), z);
      const double dz =
          rho(SignatureParam::from_alpha(alpha), z + Complex(d, d));
      CHECK(std::fabs(da - base) <= 1e-4 * base);
      CHECK(std::fabs(dz - base) <= 1e-4 * base);
    }
  }
}

TEST_CASE("pushforward density") {
  // rho~(2) = rho(1/2)/4
  CHECK(rel(pushforward_density(kA25, {2.0, 0.0}), rho(kA25, {0.5, 0.0}) / 4.0)
        <= 1e-13);
  // |z| = 1 leaves the density unchanged
  CHECK(rel(pushforward_density(kA25, {-1.0, 0.0}), rho(kA25, {-1.0, 0.0})) <=
        1e-13);
  const double v = pushforward_density(kA50, {0.3, 0.4});
  CHECK(rel(pushforward_density(kA50, {0.3, -0.4}), v) <= 1e-12);
  CHECK_THROWS_AS(pushforward_density(kA50, {0.0, 0.0}), SingularPointError);
  CHECK_THROWS_AS(pushforward_density(kA50, {1.0, 0.0}), SingularPointError);
}

TEST_CASE("domain lower bound") {
  // boundary {0,1} reduces to rho itself
  const std::vector<Complex> base{{0.0, 0.0}, {1.0, 0.0}};
  const Complex z(0.3, 0.55);
  CHECK(rel(domain_lower_bound(base, kA25, z), rho(kA25, z)) <= 1e-12);
  // boundary {0,2} at z = 1: (1/2) rho(1/2)
  const std::vector<Complex> wide{{0.0, 0.0}, {2.0, 0.0}};
  CHECK(rel(domain_lower_bound(wide, kA0, {1.0, 0.0}), 0.2284732905222318127)
        <= 1e-12);
  // adding samples never decreases the bound
  std::vector<Complex> more = base;
  const double b0 = domain_lower_bound(base, kA50, z);
  more.push_back({0.5, -0.8});
  more.push_back({-1.0, 0.2});
  CHECK(domain_lower_bound(more, kA50, z) >= b0 - 1e-15);
  CHECK_THROWS_AS(domain_lower_bound({{0.0, 0.0}}, kA0, z), DomainError);
  CHECK_THROWS_AS(domain_lower_bound({{0.0, 0.0}, {0.0, 0.0}}, kA0, z),
                  DomainError);
  CHECK_THROWS_AS(domain_lower_bound(base, kA0, {1.0, 0.0}), DomainError);
}

TEST_CASE("monotonicity scans") {
  CHECK(theta_monotone_scan(kA0, 0.7, 50));
  CHECK(theta_monotone_scan(SignatureParam::from_alpha(0.6), 2.0, 50));
  CHECK(alpha_monotone_scan({0.5, 0.0}, {0.0, 0.25, 0.5, 0.75}));
  std::vector<double> grid;
  for (int i = 0; i < 10; ++i) grid.push_back(0.1 * i);
  CHECK(alpha_monotone_scan({-3.0, 0.0}, grid));
  // two-point constant list passes trivially
  CHECK(alpha_monotone_scan({0.5, 0.0}, {0.3, 0.3}));
  CHECK_THROWS_AS(theta_monotone_scan(kA0, 0.7, 2), DomainError);
  CHECK_THROWS_AS(alpha_monotone_scan({0.5, 0.0}, {0.5, 0.3}), DomainError);
}

TEST_CASE("curvature equation on a small sample") {
  const double h = 1e-3;
  for (const SignatureParam& s : {kA0, kA50}) {
    for (Complex z : {Complex(0.35, 0.45), Complex(-0.4, 0.55),
                      Complex(1.45, 0.35)}) {
      const double rc = rho(s, z);
      const double lap =
          (std::log(rho(s, z + h)) + std::log(rho(s, z - h)) +
           std::log(rho(s, z + Complex(0, h))) +
           std::log(rho(s, z - Complex(0, h))) - 4.0 * std::log(rc)) /
          (h * h);
      CHECK(std::fabs(lap - 4.0 * rc * rc) <= 1e-4 * 4.0 * rc * rc);
    }
  }
}
