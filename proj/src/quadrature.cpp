#include "conemet/quadrature.hpp"

#include <cmath>
#include <vector>

#include "conemet/errors.hpp"

namespace conemet {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// t(u) = (1 + tanh((pi/2) sinh u)) / 2 mapped to (0,1); returns t, 1-t and
// the weight dt/du, all in cancellation-free form.
struct DeNode {
  double t, omt, w;
};

DeNode de_node(double u) {
  const double s = 0.5 * kPi * std::sinh(u);
  const double as = std::fabs(s);
  const double e = std::exp(-2.0 * as);  // in (0,1]
  const double denom = 1.0 + e;
  const double small = e / denom;        // min(t, 1-t)
  const double big = 1.0 / denom;
  DeNode n;
  if (s >= 0.0) {
    n.t = big;
    n.omt = small;
  } else {
    n.t = small;
    n.omt = big;
  }
  // sech^2(s) = 4 e^{-2|s|} / (1+e^{-2|s|})^2
  n.w = 0.25 * kPi * std::cosh(u) * 4.0 * e / (denom * denom);
  return n;
}

// Beyond |u| ~ 6.56, 1-t underflows entirely.
constexpr double kUMax = 6.56;

}  // namespace

double tanh_sinh_01(const Endpoint01Fn& f, double abs_tol, int max_level) {
  auto eval = [&](double u) -> double {
    const DeNode n = de_node(u);
    if (n.w == 0.0 || n.omt == 0.0 || n.t == 0.0) return 0.0;
    const double v = f(n.t, n.omt) * n.w;
    return std::isfinite(v) ? v : 0.0;
  };

  double h = 1.0;
  double sum = eval(0.0);
  {
    int k = 1;
    while (k * h <= kUMax) {
      sum += eval(k * h) + eval(-k * h);
      ++k;
    }
  }
  double integral = sum * h;
  double prev_diff = 0.0;
  for (int level = 1; level <= max_level; ++level) {
    h *= 0.5;
    double add = 0.0;
    for (int k = 1; (2 * k - 1) * h <= kUMax; ++k) {
      const double u = (2 * k - 1) * h;
      add += eval(u) + eval(-u);
    }
    const double next = integral * 0.5 + add * h;
    const double diff = std::fabs(next - integral);
    integral = next;
    if (level >= 3) {
      // Double-exponential convergence: the error after this level is
      // roughly diff^2 / prev_diff.
      double est = diff;
      if (prev_diff > 0.0 && diff < prev_diff)
        est = diff * (diff / prev_diff);
      if (est <= abs_tol || diff == 0.0) return integral;
    }
    prev_diff = diff;
  }
  throw NoConvergenceError("tanh_sinh_01: level cap reached before the "
                           "requested tolerance");
}

namespace {

// Gauss-Kronrod 7-15 nodes/weights on [-1,1].
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct GkEstimate {
  double value;
  double error;
};

GkEstimate gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double hl = 0.5 * (b - a);
  const double fc = f(c);
  double resk = kWgk[7] * fc;
  double resg = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double x = hl * kXgk[j];
    const double fsum = f(c - x) + f(c + x);
    resk += kWgk[j] * fsum;
    if (j % 2 == 1) resg += kWg[j / 2] * fsum;
  }
  GkEstimate e;
  e.value = resk * hl;
  e.error = std::fabs((resk - resg) * hl);
  return e;
}

void gk_adapt(const std::function<double(double)>& f, double a, double b,
              double tol, int depth, double& acc) {
  const GkEstimate e = gk15(f, a, b);
  if (e.error <= tol || depth >= 48) {
    if (depth >= 48 && e.error > 100.0 * tol)
      throw NoConvergenceError("adaptive_gauss_kronrod: depth cap reached");
    acc += e.value;
    return;
  }
  const double m = 0.5 * (a + b);
  gk_adapt(f, a, m, 0.5 * tol, depth + 1, acc);
  gk_adapt(f, m, b, 0.5 * tol, depth + 1, acc);
}

}  // namespace

double adaptive_gauss_kronrod(const std::function<double(double)>& f,
                              double x, double y, double abs_tol) {
  if (x == y) return 0.0;
  double acc = 0.0;
  gk_adapt(f, x, y, abs_tol, 0, acc);
  return acc;
}

}  // namespace conemet
