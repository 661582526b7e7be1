#include "core/mahler.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "core/errors.hpp"
#include "core/numerics.hpp"

namespace symcap {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_n(int n, const char* what) {
  if (n < 1) {
    throw Error(ErrorCode::kDimension,
                std::string(what) + ": dimension must be >= 1");
  }
}

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

void check_p_unit_interval(double p, const char* what) {
  if (!(p >= 1.0 && p <= 2.0)) {
    throw Error(ErrorCode::kDomain,
                std::string(what) + ": exponent must lie in [1, 2], got " +
                    std::to_string(p));
  }
}

// (f(y) - 1) / (1 - y), the bracketed factor of the phi integrand, with the
// series limit (1 - a) / 2 once 1 - y is below cancellation range.
double f_minus_one_over_one_minus_y(double a, double y) {
  const double one_minus_y = 1.0 - y;
  if (one_minus_y < 1e-7) return 0.5 * (1.0 - a);
  const double log_y = std::log(y);
  const double one_minus_ya = -std::expm1(a * log_y);  // 1 - y^a
  const double ya1 = std::exp((a - 1.0) * log_y);      // y^(a-1)
  const double num = a * one_minus_y * ya1 - one_minus_ya;
  return num / (one_minus_ya * one_minus_y);
}

}  // namespace

double mahler_lp(int n, double p) {
  check_n(n, "mahler_lp");
  if (std::isnan(p) || p < 1.0) {
    throw Error(ErrorCode::kDomain,
                "mahler_lp: exponent must lie in [1, inf]");
  }
  if (p == 1.0 || p == kInf) {
    return std::pow(4.0, n) / factorial(n);
  }
  const double q = p / (p - 1.0);
  const double gp = num::gamma_fn(1.0 + 1.0 / p);
  const double gq = num::gamma_fn(1.0 + 1.0 / q);
  return std::pow(2.0 * gp, n) / num::gamma_fn(1.0 + n / p) *
         std::pow(2.0 * gq, n) / num::gamma_fn(1.0 + n / q);
}

double phi(int n, double p) {
  check_n(n, "phi");
  check_p_unit_interval(p, "phi");
  const double ip = 1.0 / p;
  const double np = n * ip;
  return num::digamma(2.0 - ip) - num::digamma(1.0 + ip) +
         num::digamma(1.0 + np) - num::digamma(n + 1.0 - np);
}

double mahler_derivative(int n, double p) {
  check_n(n, "mahler_derivative");
  check_p_unit_interval(p, "mahler_derivative");
  return (n / (p * p)) * phi(n, p) * mahler_lp(n, p);
}

double phi_integrand_f(int n, double y) {
  check_n(n, "phi_integrand_f");
  if (!(y > 0.0 && y < 1.0)) {
    throw Error(ErrorCode::kDomain,
                "phi_integrand_f: argument must lie in (0, 1)");
  }
  const double a = 1.0 / n;
  const double log_y = std::log(y);
  const double one_minus_ya = -std::expm1(a * log_y);
  const double ya1 = std::exp((a - 1.0) * log_y);
  if (1.0 - y < 1e-7) {
    // f = 1 + (1-y) * (f-1)/(1-y); use the stabilized bracket.
    return 1.0 + (1.0 - y) * f_minus_one_over_one_minus_y(a, y);
  }
  return a * (1.0 - y) * ya1 / one_minus_ya;
}

double phi_integrand_g(double a, double y) {
  if (!(a > 0.0 && a <= 1.0)) {
    throw Error(ErrorCode::kDomain,
                "phi_integrand_g: first argument must lie in (0, 1]");
  }
  if (!(y >= 0.0 && y <= 1.0)) {
    throw Error(ErrorCode::kDomain,
                "phi_integrand_g: second argument must lie in [0, 1]");
  }
  return a - a * y - 1.0 + std::pow(y, a);
}

VerificationRecord phi_integral_check(int n, double p) {
  check_n(n, "phi_integral_check");
  check_p_unit_interval(p, "phi_integral_check");
  const double a = 1.0 / n;
  const double ip = 1.0 / p;
  auto integrand = [&](double y) {
    const double weight = std::pow(y, 1.0 - ip) - std::pow(y, ip);
    return weight * f_minus_one_over_one_minus_y(a, y);
  };
  const double integral =
      num::integrate(integrand, 0.0, 1.0, {1e-9, 20000});
  const double closed_form = phi(n, p);
  const double gap = std::abs(integral - closed_form);
  return VerificationRecord::make(
      "claim4.2/integral",
      1e-7, -gap,
      {{"integral", integral},
       {"digamma_form", closed_form},
       {"n", static_cast<double>(n)},
       {"p", p}});
}

MahlerScan monotonicity_scan(int n, int grid_size) {
  check_n(n, "monotonicity_scan");
  if (grid_size < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "monotonicity_scan: grid size must be >= 2");
  }
  MahlerScan scan;
  scan.n = n;
  scan.p_grid.resize(grid_size);
  scan.values.resize(grid_size);
  scan.phi_values.resize(grid_size);
  scan.derivative_values.resize(grid_size);
  for (int i = 0; i < grid_size; ++i) {
    const double p = 1.0 + static_cast<double>(i) / (grid_size - 1);
    scan.p_grid[i] = p;
    scan.values[i] = mahler_lp(n, p);
    scan.phi_values[i] = phi(n, p);
    scan.derivative_values[i] = mahler_derivative(n, p);
  }
  scan.strictly_increasing = true;
  for (int i = 1; i < grid_size; ++i) {
    if (!(scan.values[i] > scan.values[i - 1])) {
      scan.strictly_increasing = false;
      break;
    }
  }
  const double left_exact = std::pow(4.0, n) / factorial(n);
  const double half = num::gamma_fn(1.0 + 0.5 * n);
  const double right_exact = std::pow(num::kPi, n) / (half * half);
  scan.endpoint_left_rel_dev =
      std::abs(scan.values.front() - left_exact) / left_exact;
  scan.endpoint_right_rel_dev =
      std::abs(scan.values.back() - right_exact) / right_exact;
  return scan;
}

}  // namespace symcap
