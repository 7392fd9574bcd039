// circq: pointwise checks and grid scans of circulant-metric manifolds.
//
//   circq check --manifold example --point 1,0.1,2,0.2 [--tol 1e-8]
//   circq scan  --manifold path.cfg --box 0.5:1.5:2,0.5:1.5:2,0.5:1.5:2,0.5:1.5:2
//               [--checks validity,parallel] [--format json|csv] [--out report.json]
//
// Exit status: 0 all checks passed, 1 a check failed, 2 usage error,
// 3 unknown manifold, 4 manifold config could not be read or parsed.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "circq/errors.hpp"
#include "circq/manifolds.hpp"
#include "circq/report.hpp"
#include "circq/scan.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnknownManifold = 3;
constexpr int kExitConfig = 4;

struct ExitError {
  int code;
  std::string message;
};

circq::ManifoldSpec resolve_manifold(const std::string& ref) {
  if (ref == "example") return circq::example_manifold();
  std::error_code ec;
  if (!std::filesystem::is_regular_file(ref, ec))
    throw ExitError{kExitUnknownManifold, "unknown manifold '" + ref + "' (not a built-in name or a config file)"};
  try {
    return circq::load_manifold_file(ref);
  } catch (const circq::ConfigError& e) {
    throw ExitError{kExitConfig, ref + ": " + e.what()};
  }
}

template <class Fn>
auto usage_guard(Fn&& fn) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    throw ExitError{kExitUsage, e.what()};
  }
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ExitError{kExitUsage, "cannot write '" + out_path + "'"};
  out << text;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks circulant Riemannian metrics with a parallel cyclic affinor structure"};
  app.require_subcommand(1);

  std::string manifold = "example";
  std::string point_text;
  std::string box_text;
  std::string checks_text = "validity,parallel,curvature31,curvature32";
  std::string format_text = "json";
  std::string out_path;
  double tol = 1e-8;

  auto* check = app.add_subcommand("check", "Run all checks at a single point");
  check->add_option("--manifold", manifold, "Built-in name (example) or config file path");
  check->add_option("--point", point_text, "x1,x2,x3,x4")->required();
  check->add_option("--tol", tol, "Tolerance for residual checks");
  check->add_option("--checks", checks_text, "Subset of validity,parallel,curvature31,curvature32");
  check->add_option("--format", format_text, "json or csv");
  check->add_option("--out", out_path, "Write the report here instead of stdout");

  auto* scan = app.add_subcommand("scan", "Run checks over a Cartesian grid");
  scan->add_option("--manifold", manifold, "Built-in name (example) or config file path");
  scan->add_option("--box", box_text, "a1:b1:n1,a2:b2:n2,a3:b3:n3,a4:b4:n4")->required();
  scan->add_option("--checks", checks_text, "Subset of validity,parallel,curvature31,curvature32");
  scan->add_option("--tol", tol, "Tolerance for residual checks");
  scan->add_option("--format", format_text, "json or csv");
  scan->add_option("--out", out_path, "Write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    const auto format = usage_guard([&] { return circq::parse_format(format_text); });
    const auto checks = usage_guard([&] { return circq::parse_checks(checks_text); });
    if (!(tol > 0.0)) throw ExitError{kExitUsage, "--tol must be positive"};

    circq::Report report;
    if (check->parsed()) {
      const circq::Point4 p = usage_guard([&] { return circq::parse_point(point_text); });
      const circq::ManifoldSpec m = resolve_manifold(manifold);
      report = circq::check_point(m, p, checks, tol);
    } else {
      circq::ScanConfig cfg;
      cfg.axes = usage_guard([&] { return circq::parse_box(box_text); });
      cfg.checks = checks;
      cfg.tolerance = tol;
      cfg.threads = usage_guard([] { return circq::default_thread_count(); });
      const circq::ManifoldSpec m = resolve_manifold(manifold);
      report = circq::scan(m, cfg);
    }
    emit(circq::serialize(report, format), out_path);
    return report.all_passed() ? kExitPass : kExitFail;
  } catch (const ExitError& e) {
    std::cerr << "circq: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "circq: " << e.what() << "\n";
    return kExitUsage;
  }
}
