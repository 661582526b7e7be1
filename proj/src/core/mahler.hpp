#pragma once

#include <vector>

#include "core/records.hpp"

namespace symcap {

/// Mahler volume of the l_p unit ball in dimension n,
/// vol(B_p) * vol(B_q) with 1/p + 1/q = 1. Exact limits at p in {1, inf}.
double mahler_lp(int n, double p);

/// Logarithmic-derivative factor: d/dp log M_n(p) = (n / p^2) * phi(n, p).
/// phi(n, p) = psi(2 - 1/p) - psi(1 + 1/p) + psi(1 + n/p) - psi(n + 1 - n/p),
/// for p in [1, 2].
double phi(int n, double p);

/// dM_n/dp = (n / p^2) * phi(n, p) * M_n(p), for p in [1, 2].
double mahler_derivative(int n, double p);

/// f(y) = a (1 - y) y^(a-1) / (1 - y^a) with a = 1/n, on (0, 1).
/// Stable near y = 1 where the direct expression is 0/0; f(1-) = 1.
double phi_integrand_f(int n, double y);

/// g(y) = a - a y - 1 + y^a on [0, 1], a in (0, 1]; g <= 0 with g(1) = 0.
double phi_integrand_g(double a, double y);

/// Quadrature evaluation of
///   phi(n, p) = int_0^1 (y^(1-1/p) - y^(1/p)) (f(y) - 1) / (1 - y) dy
/// against the digamma closed form; both values and their gap are recorded.
VerificationRecord phi_integral_check(int n, double p);

struct MahlerScan {
  int n = 0;
  std::vector<double> p_grid;
  std::vector<double> values;
  std::vector<double> phi_values;
  std::vector<double> derivative_values;
  bool strictly_increasing = false;
  double endpoint_left_rel_dev = 0.0;   // vs 4^n / n!
  double endpoint_right_rel_dev = 0.0;  // vs pi^n / Gamma(1 + n/2)^2
};

/// Uniform scan of M_n over [1, 2] with derivative values and endpoint
/// identities.
MahlerScan monotonicity_scan(int n, int grid_size);

}  // namespace symcap
