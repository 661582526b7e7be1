// Command line front end.  Everything goes through the public C API so the
// tool doubles as an end-to-end exercise of the shared library.
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "svg.hpp"
#include "symcap.h"

using nlohmann::json;

namespace {

struct GlobalOptions {
  double tol = 1e-8;
  std::uint64_t seed = 20200820;
  int threads = 1;
  long long mc_samples = 1000000;
};

// Owns a string allocated by the library.
struct CString {
  char* ptr = nullptr;
  ~CString() { symcap_string_free(ptr); }
  std::string str() const { return ptr == nullptr ? "" : ptr; }
};

[[noreturn]] void die(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  std::exit(2);
}

void check(symcap_status status) {
  if (status != SYMCAP_OK) die(symcap_last_error());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) die("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) die("cannot open " + path + " for writing");
  out << text;
}

double parse_exponent(const std::string& text) {
  if (text == "inf" || text == "Inf" || text == "INF") {
    return std::numeric_limits<double>::infinity();
  }
  try {
    size_t used = 0;
    const double value = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    die("cannot parse exponent \"" + text + "\" (expected a number or inf)");
  }
}

std::string fmt(double value) {
  std::ostringstream out;
  out << std::setprecision(17) << value;
  return out.str();
}

std::string csv_quote(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

int run_capacity(const std::vector<std::string>& files,
                 const std::string& json_path) {
  json reports = json::array();
  std::cout << "region,capacity,provenance\n";
  for (const std::string& file : files) {
    const std::string text = read_file(file);
    symcap_region* region = nullptr;
    check(symcap_region_from_json(text.c_str(), &region));
    int is_convex = 0, is_concave = 0;
    check(symcap_region_classify(region, &is_convex, &is_concave));

    double value = 0.0;
    CString report_json;
    if (is_convex != 0) {
      check(symcap_region_capacity(region, &value, &report_json.ptr));
    } else if (is_concave != 0) {
      check(symcap_region_gromov_width(region, &value, &report_json.ptr));
    } else {
      symcap_region_free(region);
      die(file + ": region is neither convex nor concave");
    }
    symcap_region_free(region);

    const json report = json::parse(report_json.str());
    std::cout << csv_quote(file) << "," << fmt(value) << ","
              << csv_quote(report.at("provenance").get<std::string>())
              << "\n";
    json entry = report;
    entry["region"] = file;
    reports.push_back(entry);
  }
  if (!json_path.empty()) write_file(json_path, reports.dump(2) + "\n");
  return 0;
}

int run_mahler(const std::vector<int>& ns, double pmin, double pmax,
               int grid) {
  if (!(1.0 <= pmin && pmin <= pmax && pmax <= 2.0)) {
    die("mahler scan needs 1 <= pmin <= pmax <= 2");
  }
  if (grid < 2) die("grid must be at least 2");
  std::cout << "n,p,mahler,phi,derivative\n";
  for (int n : ns) {
    for (int i = 0; i < grid; ++i) {
      const double p = pmin + (pmax - pmin) * i / (grid - 1);
      double m = 0.0, ph = 0.0, dm = 0.0;
      check(symcap_mahler_lp(n, p, &m));
      check(symcap_mahler_phi(n, p, &ph));
      check(symcap_mahler_derivative(n, p, &dm));
      std::cout << n << "," << fmt(p) << "," << fmt(m) << "," << fmt(ph)
                << "," << fmt(dm) << "\n";
    }
  }
  return 0;
}

int run_phi_scan(const std::vector<int>& ns, int grid,
                 const std::string& json_path) {
  if (grid < 3) die("grid must be at least 3");
  json out = json::array();
  for (int n : ns) {
    bool increasing = true;
    double min_phi = std::numeric_limits<double>::infinity();
    double min_mid_derivative = min_phi;
    double prev = 0.0;
    for (int i = 0; i < grid; ++i) {
      const double p = 1.0 + static_cast<double>(i) / (grid - 1);
      double m = 0.0;
      check(symcap_mahler_lp(n, p, &m));
      if (i > 0 && !(m > prev)) increasing = false;
      prev = m;
      if (i > 0 && i + 1 < grid) {
        double ph = 0.0;
        check(symcap_mahler_phi(n, p, &ph));
        min_phi = std::min(min_phi, ph);
      }
      if (i + 1 < grid) {
        const double mid = 1.0 + (i + 0.5) / (grid - 1);
        double dm = 0.0;
        check(symcap_mahler_derivative(n, mid, &dm));
        min_mid_derivative = std::min(min_mid_derivative, dm);
      }
    }
    double left = 0.0, right = 0.0;
    check(symcap_mahler_lp(n, 1.0, &left));
    check(symcap_mahler_lp(n, 2.0, &right));
    json entry = {{"n", n},
                  {"grid", grid},
                  {"strictly_increasing", increasing},
                  {"min_interior_phi", min_phi},
                  {"min_midpoint_derivative", min_mid_derivative},
                  {"mahler_at_1", left},
                  {"mahler_at_2", right}};
    out.push_back(entry);
    std::cout << "n=" << n << " strictly_increasing="
              << (increasing ? "true" : "false") << " min_phi=" << min_phi
              << " min_midpoint_derivative=" << min_mid_derivative << "\n";
  }
  if (!json_path.empty()) write_file(json_path, out.dump(2) + "\n");
  return 0;
}

int run_xp(const std::string& p_text, int points, const std::string& svg_path,
           const std::string& report_path) {
  if (points < 3) die("points must be at least 3");
  const double p = parse_exponent(p_text);

  double value = 0.0;
  CString report_json;
  check(symcap_xp_capacity(p, &value, &report_json.ptr));
  if (!report_path.empty()) write_file(report_path, report_json.str() + "\n");

  const double vmax = std::isinf(p) ? 1.0 : std::pow(0.25, 1.0 / p);
  svgplot::Series curve;
  std::cout << "v,w1,w2\n";
  for (int i = 0; i < points; ++i) {
    const double v = -vmax + 2.0 * vmax * i / (points - 1);
    double w1 = 0.0, w2 = 0.0;
    check(symcap_xp_curve(p, v, &w1, &w2));
    std::cout << fmt(v) << "," << fmt(w1) << "," << fmt(w2) << "\n";
    curve.push_back({w1, w2});
  }
  if (!svg_path.empty()) svgplot::write_polylines(svg_path, {curve});
  std::cerr << "capacity(X_" << p_text << ") = " << fmt(value) << "\n";
  return 0;
}

int print_records(const json& records, const std::string& csv_path,
                  bool numbered) {
  std::ostringstream csv;
  csv << "claim_id,slack,tolerance,passed\n";
  int failures = 0;
  int index = 0;
  for (const json& record : records) {
    ++index;
    const bool passed = record.at("passed").get<bool>();
    if (!passed) ++failures;
    const std::string claim = record.at("claim_id").get<std::string>();
    const double slack = record.at("slack").get<double>();
    const double tolerance = record.at("tolerance").get<double>();
    std::cout << (passed ? "[PASS] " : "[FAIL] ");
    if (numbered) std::cout << "criterion " << index << ": ";
    std::cout << claim << " (slack=" << slack << ", tol=" << tolerance
              << ")\n";
    csv << csv_quote(claim) << "," << fmt(slack) << "," << fmt(tolerance)
        << "," << (passed ? "true" : "false") << "\n";
  }
  std::cout << (failures == 0 ? "all checks passed"
                              : std::to_string(failures) + " check(s) failed")
            << " (" << records.size() << " total)\n";
  if (!csv_path.empty()) write_file(csv_path, csv.str());
  return failures == 0 ? 0 : 1;
}

int run_verify(const GlobalOptions& global, const std::string& suite,
               const std::string& csv_path, const std::string& json_path) {
  CString records_json;
  int all_passed = 0;
  check(symcap_verify_run(suite.c_str(), global.seed, global.tol,
                          global.mc_samples, global.threads, &records_json.ptr,
                          &all_passed));
  if (!json_path.empty()) write_file(json_path, records_json.str() + "\n");
  return print_records(json::parse(records_json.str()), csv_path,
                       suite == "acceptance");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symplectic capacities of toric domains and Lagrangian "
               "products, with Mahler-volume tooling"};
  app.set_version_flag("--version", symcap_version());
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--tol", global.tol,
                 "Tolerance for verify checks without a pinned tolerance")
      ->capture_default_str();
  app.add_option("--seed", global.seed, "Base RNG seed")
      ->capture_default_str();
  app.add_option("--threads", global.threads, "Worker threads for Monte Carlo")
      ->capture_default_str();
  app.add_option("--mc-samples", global.mc_samples,
                 "Monte Carlo sample count")
      ->capture_default_str();

  std::vector<std::string> capacity_files;
  std::string capacity_json;
  CLI::App* cap = app.add_subcommand(
      "capacity", "Capacity of toric regions from JSON files (CSV on stdout)");
  cap->add_option("files", capacity_files, "Region JSON files")
      ->required()
      ->expected(-1);
  cap->add_option("--json", capacity_json, "Write full reports to this file");

  std::vector<int> mahler_ns{2};
  double pmin = 1.0, pmax = 2.0;
  int mahler_grid = 101;
  CLI::App* mah = app.add_subcommand(
      "mahler", "Mahler volume table for l_p balls (CSV on stdout)");
  mah->add_option("--n", mahler_ns, "Dimensions to tabulate")
      ->capture_default_str();
  mah->add_option("--pmin", pmin, "Left end of the p grid")
      ->capture_default_str();
  mah->add_option("--pmax", pmax, "Right end of the p grid")
      ->capture_default_str();
  mah->add_option("--grid", mahler_grid, "Number of grid points")
      ->capture_default_str();

  std::vector<int> scan_ns{2, 3, 4};
  int scan_grid = 501;
  std::string scan_json;
  CLI::App* scan = app.add_subcommand(
      "phi-scan", "Monotonicity scan of the Mahler volume on [1,2]");
  scan->add_option("--n", scan_ns, "Dimensions to scan")->capture_default_str();
  scan->add_option("--grid", scan_grid, "Number of grid points")
      ->capture_default_str();
  scan->add_option("--json", scan_json, "Write scan summaries to this file");

  std::string xp_p = "2";
  int xp_points = 257;
  std::string xp_svg, xp_report;
  CLI::App* xp = app.add_subcommand(
      "xp", "Boundary curve and capacity of X_p (curve CSV on stdout)");
  xp->add_option("--p", xp_p, "Exponent in [1, inf]; accepts \"inf\"")
      ->capture_default_str();
  xp->add_option("--points", xp_points, "Curve sample count")
      ->capture_default_str();
  xp->add_option("--svg", xp_svg, "Write an SVG plot of the curve");
  xp->add_option("--report", xp_report, "Write the capacity report JSON");

  std::string verify_suite = "all";
  std::string verify_csv, verify_json;
  CLI::App* ver = app.add_subcommand(
      "verify", "Run verification suites and print one line per record");
  ver->add_option("--suite", verify_suite,
                  "numerics|oracles|bodies|toric|mahler|lagrangian|"
                  "acceptance|all")
      ->capture_default_str();
  ver->add_option("--csv", verify_csv, "Write records CSV to this file");
  ver->add_option("--json", verify_json, "Write records JSON to this file");

  std::string report_csv, report_json_path;
  CLI::App* rep = app.add_subcommand(
      "report", "Run the acceptance battery (numbered criteria)");
  rep->add_option("--csv", report_csv, "Write records CSV to this file");
  rep->add_option("--json", report_json_path,
                  "Write records JSON to this file");

  for (CLI::App* sub : {cap, mah, scan, xp, ver, rep}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (app.got_subcommand(cap)) return run_capacity(capacity_files, capacity_json);
  if (app.got_subcommand(mah)) return run_mahler(mahler_ns, pmin, pmax, mahler_grid);
  if (app.got_subcommand(scan)) return run_phi_scan(scan_ns, scan_grid, scan_json);
  if (app.got_subcommand(xp)) return run_xp(xp_p, xp_points, xp_svg, xp_report);
  if (app.got_subcommand(ver)) return run_verify(global, verify_suite, verify_csv, verify_json);
  if (app.got_subcommand(rep)) return run_verify(global, "acceptance", report_csv, report_json_path);
  return 2;
}
