// Acceptance runner: each criterion prints one PASS/FAIL line.  A single
// criterion can be selected by argument (c1 .. c10); default runs all.
// Exit code is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "conemet/verify.hpp"

namespace {

using conemet::verify::CheckResult;
using conemet::verify::Level;

struct Criterion {
  const char* id;
  const char* title;
  bool (*run)(std::string& detail);
};

bool wrap(CheckResult r, std::string& detail) {
  detail = r.detail;
  return r.passed;
}

bool c1(std::string& d) { return wrap(conemet::verify::check_special_values(Level::full), d); }
bool c2(std::string& d) { return wrap(conemet::verify::check_elliott(Level::full), d); }
bool c3(std::string& d) { return wrap(conemet::verify::check_reflection_identity(Level::full), d); }
bool c4(std::string& d) { return wrap(conemet::verify::check_triangle_map(Level::full), d); }
bool c5(std::string& d) { return wrap(conemet::verify::check_curvature(Level::full), d); }
bool c6(std::string& d) { return wrap(conemet::verify::check_axis_distance(Level::full), d); }

bool c7(std::string& d) {
  std::string d1, d2;
  const bool inf_ok = wrap(conemet::verify::check_asymptotics_infinity(Level::full), d1);
  const bool zero_ok = wrap(conemet::verify::check_asymptotics_origin(Level::full), d2);
  d = d1 + " | " + d2;
  return inf_ok && zero_ok;
}

bool c8(std::string& d) {
  std::string d1, d2, d3;
  const bool t = wrap(conemet::verify::check_monotonicity_theta(Level::full), d1);
  const bool a = wrap(conemet::verify::check_monotonicity_alpha(Level::full), d2);
  const bool lb = wrap(conemet::verify::check_lower_bound(Level::full), d3);
  d = d1 + " | " + d2 + " | " + d3;
  return t && a && lb;
}

bool c9(std::string& d) { return wrap(conemet::verify::check_oracle_agreement(Level::full), d); }

bool c10(std::string& d) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto results = conemet::verify::run_all(Level::full, nullptr);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  const bool ok = conemet::verify::all_passed(results);
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "full verify suite: %s in %.1fs (need exit 0 under 300s)",
                ok ? "all passed" : "has failures", secs);
  d = buf;
  return ok && secs < 300.0;
}

const Criterion kCriteria[] = {
    {"c1", "closed-form special values K_a(1/2), rho_alpha(1/2)", c1},
    {"c2", "Elliott identity residual on complex grid", c2},
    {"c3", "hypergeometric reflection product identity", c3},
    {"c4", "triangle-map containment and boundary line", c4},
    {"c5", "curvature equation via 5-point Laplacian", c5},
    {"c6", "axis distance: Phi differences vs quadrature, Phi(inf)", c6},
    {"c7", "asymptotic laws at infinity and the origin", c7},
    {"c8", "monotonicity scans and radial lower bound", c8},
    {"c9", "series paths vs tanh-sinh quadrature oracle", c9},
    {"c10", "full verify suite passes in under 5 minutes", c10},
};

}  // namespace

int main(int argc, char** argv) {
  int failures = 0;
  const char* only = argc > 1 ? argv[1] : nullptr;
  bool matched = false;
  for (const Criterion& c : kCriteria) {
    if (only && std::strcmp(only, c.id) != 0 && std::strcmp(only, "--all") != 0)
      continue;
    matched = true;
    std::string detail;
    const bool ok = c.run(detail);
    std::printf("[%s] %s: %s (%s)\n", ok ? "PASS" : "FAIL", c.id, c.title,
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  if (!matched) {
    std::fprintf(stderr, "unknown criterion '%s' (use c1..c10 or --all)\n",
                 only);
    return 64;
  }
  return failures;
}
