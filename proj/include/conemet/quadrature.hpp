#ifndef CONEMET_QUADRATURE_HPP
#define CONEMET_QUADRATURE_HPP

// Generic 1-D quadrature: tanh-sinh (double exponential) on (0,1) for
// integrands with endpoint singularities, and adaptive Gauss-Kronrod
// (G7,K15) on finite intervals for smooth integrands.

#include <functional>

namespace conemet {

// Integrand receives (t, 1-t); the second argument is exact near t = 1
// where forming 1-t from t would lose all precision.
using Endpoint01Fn = std::function<double(double t, double one_minus_t)>;

// Integrates over (0,1) with the tanh-sinh substitution.  Levels are
// refined up to max_level (grid 2^-max_level); the error estimate comes
// from the decay of successive level differences.
double tanh_sinh_01(const Endpoint01Fn& f, double abs_tol,
                    int max_level = 12);

// Adaptive Gauss-Kronrod on [x, y] to absolute tolerance abs_tol.
double adaptive_gauss_kronrod(const std::function<double(double)>& f,
                              double x, double y, double abs_tol);

}  // namespace conemet

#endif
