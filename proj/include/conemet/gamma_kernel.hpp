#ifndef CONEMET_GAMMA_KERNEL_HPP
#define CONEMET_GAMMA_KERNEL_HPP

// Real-argument gamma-family kernel: Gamma, log Gamma, digamma and Beta
// for strictly positive arguments.  Everything downstream (hypergeometric
// connection coefficients, closed-form special values) funnels through
// these four functions.

namespace conemet {

// Gamma(x) for x > 0.  Relative error <= 1e-13 on (0, 10].
// Throws DomainError for x <= 0 or non-finite x.
double gamma(double x);

// log Gamma(x) for x > 0; exp(log_gamma(x)) matches gamma(x) to 1e-12.
double log_gamma(double x);

// psi(x) = Gamma'(x)/Gamma(x) for x > 0.
double digamma(double x);

// B(a,b) = Gamma(a)Gamma(b)/Gamma(a+b), evaluated through log_gamma.
double beta(double a, double b);

namespace detail {
// Gamma on (-n, 0) u (0, inf) excluding the poles, by recurrence lift into
// the positive axis.  Internal helper for connection coefficients; the
// public kernel stays positive-only.
double gamma_real(double x);
}

}  // namespace conemet

#endif
