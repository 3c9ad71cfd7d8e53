// conemet: density, distance and diagnostics of the hyperbolic metric of
// the twice-punctured sphere with one conical singularity at infinity.
//
// Subcommands:
//   density    rho_alpha at one point
//   distance   geodesic distance between two points + radial lower bound
//   grid       rectangular evaluation grid to CSV or JSON
//   verify     run the self-check suite (quick | full)
//   constants  asymptotic constants and closed-form special values
//
// Exit codes: 0 ok, 1 verification failure, 2 domain error, 3 I/O error.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "conemet/cone_metric.hpp"
#include "conemet/distance.hpp"
#include "conemet/errors.hpp"
#include "conemet/gamma_kernel.hpp"
#include "conemet/verify.hpp"

namespace {

using conemet::Complex;
using conemet::SignatureParam;

std::string fmt_g(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

Complex parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) return {std::stod(text), 0.0};
    return {std::stod(text.substr(0, comma)),
            std::stod(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("expected a complex number as re,im: " + text);
  }
}

struct GridSpec {
  double re_min, re_max, im_min, im_max;
  int nx, ny;
  double alpha;
};

struct GridRecord {
  double re, im, rho_val, err;
  const char* method;
  bool skipped;
};

int run_grid(const GridSpec& spec, const std::string& format,
             const std::string& out_path, int digits, int threads) {
  const SignatureParam s = SignatureParam::from_alpha(spec.alpha);
  std::vector<GridRecord> records(
      static_cast<size_t>(spec.nx) * static_cast<size_t>(spec.ny));
  const auto node = [&](int ix, int iy) -> Complex {
    return {spec.re_min + (spec.re_max - spec.re_min) * ix / (spec.nx - 1.0),
            spec.im_min + (spec.im_max - spec.im_min) * iy / (spec.ny - 1.0)};
  };
  const auto eval_row = [&](int iy) {
    for (int ix = 0; ix < spec.nx; ++ix) {
      const Complex z = node(ix, iy);
      GridRecord& rec = records[static_cast<size_t>(iy) * spec.nx + ix];
      rec.re = z.real();
      rec.im = z.imag();
      if (z == Complex(0.0, 0.0) || z == Complex(1.0, 0.0)) {
        rec.skipped = true;
        continue;
      }
      const conemet::DensityResult d = conemet::rho_density(s, z);
      rec.rho_val = d.value;
      rec.err = d.est_rel_err;
      rec.method = conemet::method_name(d.method);
      rec.skipped = false;
    }
  };
  // rows fan out across workers; the output order is fixed by the record
  // indices, not by completion order
  const int nworkers = std::max(
      1, std::min(threads, static_cast<int>(std::thread::hardware_concurrency())));
  std::vector<std::future<void>> futs;
  std::atomic<int> next_row{0};
  for (int w = 0; w < nworkers; ++w) {
    futs.push_back(std::async(std::launch::async, [&]() {
      for (int iy; (iy = next_row.fetch_add(1)) < spec.ny;) eval_row(iy);
    }));
  }
  for (auto& f : futs) f.get();

  for (const GridRecord& rec : records) {
    if (rec.skipped)
      std::cerr << "warning: skipping singular node z=" << rec.re << ","
                << rec.im << "\n";
  }

  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open " << out_path << " for writing\n";
    return 3;
  }
  try {
    if (format == "csv") {
      out << "re,im,rho,method,est_rel_err\n";
      for (const GridRecord& rec : records) {
        if (rec.skipped) continue;
        out << fmt_g(rec.re, digits) << ',' << fmt_g(rec.im, digits) << ','
            << fmt_g(rec.rho_val, digits) << ',' << rec.method << ','
            << fmt_g(rec.err, 3) << '\n';
      }
    } else {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const GridRecord& rec : records) {
        if (rec.skipped) continue;
        arr.push_back({{"re", rec.re},
                       {"im", rec.im},
                       {"rho", rec.rho_val},
                       {"method", rec.method},
                       {"est_rel_err", rec.err}});
      }
      out << arr.dump(2) << '\n';
    }
    out.flush();
    if (!out) throw std::runtime_error("write failed");
  } catch (...) {
    out.close();
    std::remove(out_path.c_str());
    std::cerr << "error: failed while writing " << out_path << "\n";
    return 3;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "hyperbolic metric of the twice-punctured sphere with a conical "
      "singularity at infinity"};
  app.require_subcommand(1);

  double alpha = 0.0;
  std::string z_text = "0.5,0", z1_text, z2_text;
  int digits = 15;

  auto* density = app.add_subcommand("density", "evaluate rho_alpha(z)");
  density->add_option("--alpha", alpha, "cone angle / 2 pi, in [0,1)")
      ->required();
  density->add_option("--z", z_text, "evaluation point re,im")->required();
  density->add_option("--digits", digits, "significant digits (default 15)");

  auto* distance =
      app.add_subcommand("distance", "geodesic distance d_alpha(z1,z2)");
  distance->add_option("--alpha", alpha)->required();
  distance->add_option("--z1", z1_text, "first point re,im")->required();
  distance->add_option("--z2", z2_text, "second point re,im")->required();
  distance->add_option("--digits", digits);

  GridSpec spec{};
  std::string format = "csv", out_path = "grid.csv";
  int grid_digits = 17;
  int threads = static_cast<int>(std::thread::hardware_concurrency());
  auto* grid = app.add_subcommand("grid", "evaluate rho on a grid");
  grid->add_option("--alpha", spec.alpha)->required();
  grid->add_option("--re-min", spec.re_min)->required();
  grid->add_option("--re-max", spec.re_max)->required();
  grid->add_option("--im-min", spec.im_min)->required();
  grid->add_option("--im-max", spec.im_max)->required();
  grid->add_option("--nx", spec.nx, "columns (>= 2)")->required();
  grid->add_option("--ny", spec.ny, "rows (>= 2)")->required();
  grid->add_option("--format", format)
      ->check(CLI::IsMember({"csv", "json"}));
  grid->add_option("--out", out_path, "output path")->required();
  grid->add_option("--digits", grid_digits, "significant digits (default 17)");
  grid->add_option("--threads", threads, "worker threads");

  std::string level_text = "quick";
  auto* verify = app.add_subcommand("verify", "run the self-check suite");
  verify->add_option("--level", level_text)
      ->check(CLI::IsMember({"quick", "full"}));

  auto* constants =
      app.add_subcommand("constants", "asymptotic constants for one alpha");
  constants->add_option("--alpha", alpha)->required();
  constants->add_option("--digits", digits);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*density) {
      const SignatureParam s = SignatureParam::from_alpha(alpha);
      const Complex z = parse_complex(z_text);
      const conemet::DensityResult r = conemet::rho_density(s, z);
      std::cout << "rho = " << fmt_g(r.value, digits) << "\n"
                << "method = " << conemet::method_name(r.method) << "\n"
                << "est_rel_err = " << fmt_g(r.est_rel_err, 3) << "\n"
                << "terms_used = " << r.terms_used << "\n";
      return 0;
    }
    if (*distance) {
      const SignatureParam s = SignatureParam::from_alpha(alpha);
      const Complex z1 = parse_complex(z1_text);
      const Complex z2 = parse_complex(z2_text);
      const double d = conemet::geodesic_distance(s, z1, z2);
      const double lb = std::abs(z1) <= std::abs(z2)
                            ? conemet::radial_lower_bound(s, z1, z2)
                            : conemet::radial_lower_bound(s, z2, z1);
      std::cout << "distance = " << fmt_g(d, digits) << "\n"
                << "radial_lower_bound = " << fmt_g(lb, digits) << "\n";
      return 0;
    }
    if (*grid) {
      if (spec.nx < 2 || spec.ny < 2 || !(spec.re_min < spec.re_max) ||
          !(spec.im_min < spec.im_max)) {
        std::cerr << "error: invalid grid extents\n";
        return 2;
      }
      return run_grid(spec, format, out_path, grid_digits, threads);
    }
    if (*verify) {
      const auto level = level_text == "full"
                             ? conemet::verify::Level::full
                             : conemet::verify::Level::quick;
      const auto results = conemet::verify::run_all(level, &std::cout);
      const bool ok = conemet::verify::all_passed(results);
      std::cout << (ok ? "all checks passed\n" : "CHECKS FAILED\n");
      return ok ? 0 : 1;
    }
    if (*constants) {
      const SignatureParam s = SignatureParam::from_alpha(alpha);
      const conemet::AsymptoticConstants c = conemet::asymptotic_constants(s);
      std::cout << "a = " << fmt_g(s.a, digits) << "\n"
                << "c0 = " << fmt_g(c.c0, digits) << "\n"
                << "c1 = " << fmt_g(c.c1, digits) << "\n"
                << "exponent_inf = " << fmt_g(c.exponent_inf, digits) << "\n";
      if (c.cusp_at_infinity)
        std::cout << "c_inf = (cusp at infinity; double-log law)\n";
      else
        std::cout << "c_inf = " << fmt_g(*c.c_inf, digits) << "\n";
      std::cout << "rho_half = " << fmt_g(conemet::rho_half(s), digits) << "\n"
                << "k_half_closed = "
                << fmt_g(conemet::gamma(0.5 * (1.0 - s.a)) *
                             conemet::gamma(0.5 * s.a) *
                             std::sin(3.141592653589793 * s.a) /
                             (4.0 * std::sqrt(3.141592653589793)),
                         digits)
                << "\n";
      return 0;
    }
  } catch (const conemet::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const conemet::ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const conemet::DivergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
