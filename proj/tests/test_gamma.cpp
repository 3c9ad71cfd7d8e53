#include <cmath>

#include <doctest.h>

#include "conemet/errors.hpp"
#include "conemet/gamma_kernel.hpp"

using namespace conemet;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

double rel(double got, double want) {
  return std::fabs(got - want) / std::fabs(want);
}
}  // namespace

TEST_CASE("gamma: reference values") {
  CHECK(rel(conemet::gamma(1.0), 1.0) <= 1e-15);
  CHECK(rel(conemet::gamma(0.5), std::sqrt(kPi)) <= 1e-14);
  // 40-digit reference value of Gamma(1/4)
  CHECK(rel(conemet::gamma(0.25), 3.625609908221908312) <= 1e-13);
  CHECK(rel(conemet::gamma(6.0), 120.0) <= 1e-14);
}

TEST_CASE("gamma: domain errors") {
  CHECK_THROWS_AS(conemet::gamma(0.0), DomainError);
  CHECK_THROWS_AS(conemet::gamma(-1.5), DomainError);
  CHECK_THROWS_AS(conemet::gamma(std::nan("")), DomainError);
  CHECK_THROWS_AS(log_gamma(-0.1), DomainError);
  CHECK_THROWS_AS(digamma(0.0), DomainError);
  CHECK_THROWS_AS(beta(1.0, 0.0), DomainError);
}

TEST_CASE("log_gamma: values and consistency with gamma") {
  CHECK(std::fabs(log_gamma(1.0)) <= 1e-14);
  CHECK(std::fabs(log_gamma(2.0)) <= 1e-14);
  CHECK(rel(log_gamma(0.25), 1.288022524698077457) <= 1e-13);
  for (int i = 1; i <= 60; ++i) {
    const double x = 0.15 * i;
    CHECK(rel(std::exp(log_gamma(x)), conemet::gamma(x)) <= 1e-12);
  }
}

TEST_CASE("digamma: values") {
  CHECK(std::fabs(digamma(1.0) + kEulerGamma) <= 1e-14);
  CHECK(std::fabs(digamma(0.5) - (-kEulerGamma - 2.0 * std::log(2.0))) <=
        1e-13);
  CHECK(std::fabs(digamma(2.0) - (1.0 - kEulerGamma)) <= 1e-14);
}

TEST_CASE("beta: values") {
  CHECK(rel(beta(1.0, 1.0), 1.0) <= 1e-14);
  CHECK(rel(beta(0.5, 0.5), kPi) <= 1e-13);
  // reflection: B(a, 1-a) = pi / sin(pi a)
  CHECK(rel(beta(0.25, 0.75), 4.442882938158366247) <= 1e-13);
}

TEST_CASE("gamma: recurrence, reflection, duplication over a grid") {
  for (int i = 1; i <= 89; ++i) {
    const double x = 0.1 * i;  // 0.1 .. 8.9
    CHECK(rel(conemet::gamma(x + 1.0), x * conemet::gamma(x)) <= 1e-12);
  }
  for (int i = 1; i <= 98; ++i) {
    const double x = 0.01 + (0.98 * i) / 99.0;
    CHECK(std::fabs(conemet::gamma(x) * conemet::gamma(1.0 - x) * std::sin(kPi * x) / kPi -
                    1.0) <= 1e-12);
  }
  for (int i = 1; i <= 40; ++i) {
    const double x = 0.11 * i;
    const double dup = conemet::gamma(x) * conemet::gamma(x + 0.5) *
                       std::pow(2.0, 2.0 * x - 1.0) / std::sqrt(kPi);
    CHECK(rel(conemet::gamma(2.0 * x), dup) <= 1e-12);
  }
}

TEST_CASE("digamma: recurrence psi(x+1) - psi(x) = 1/x") {
  for (int i = 1; i <= 95; ++i) {
    const double x = 0.1 * i;
    CHECK(std::fabs(digamma(x + 1.0) - digamma(x) - 1.0 / x) <= 1e-12);
  }
}

TEST_CASE("gamma_real: negative non-integer arguments by recurrence") {
  // Gamma(-0.5) = -2 sqrt(pi)
  CHECK(rel(detail::gamma_real(-0.5), -2.0 * std::sqrt(kPi)) <= 1e-13);
  // Gamma(-1.5) = 4 sqrt(pi) / 3
  CHECK(rel(detail::gamma_real(-1.5), 4.0 * std::sqrt(kPi) / 3.0) <= 1e-13);
  CHECK(detail::gamma_real(0.25) == conemet::gamma(0.25));
  CHECK_THROWS_AS(detail::gamma_real(-1.0), ParameterError);
  CHECK_THROWS_AS(detail::gamma_real(-2.0000000001), ParameterError);
}
