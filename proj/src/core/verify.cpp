#include "core/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>

#include "core/bodies.hpp"
#include "core/errors.hpp"
#include "core/gen.hpp"
#include "core/lagrangian.hpp"
#include "core/mahler.hpp"
#include "core/numerics.hpp"
#include "core/oracles.hpp"
#include "core/toric.hpp"

namespace symcap::verify {

namespace {

using num::RngStream;

constexpr double kInf = std::numeric_limits<double>::infinity();

// Stream ids keep every suite's draws independent of the others.
enum : uint64_t {
  kStreamOracle = 101,
  kStreamChain = 104,
  kStreamHanner = 105,
  kStreamDuality = 111,
  kStreamViterbo = 112,
  kStreamBodies = 201,
  kStreamToric = 202,
  kStreamLagrangian = 203,
  kStreamMc = 204,
};

double rel_to(double value, double expected) {
  return std::abs(value - expected) /
         std::max({std::abs(expected), std::abs(value), 1e-300});
}

// Margin-style record: slack >= 0 is the distance to the worst allowed
// deviation, with the individual tolerances spelled out in quantities.
VerificationRecord margin_record(std::string id, double margin,
                                 std::map<std::string, double> q) {
  return VerificationRecord::make(std::move(id), 0.0, margin, std::move(q));
}

// One re-seed allowed: a single 3-sigma miss retries on a fresh substream and
// the verdict is whatever the second run says.
struct McCheck {
  double z = 0.0;
  int reseeds = 0;
  MCEstimate estimate;
};

McCheck mc_check(const oracle::MembershipFn& member, const oracle::BBox& box,
                 long long samples, int threads, const RngStream& base,
                 double exact) {
  McCheck out;
  out.estimate = oracle::mc_volume(member, box, samples, base, threads);
  out.z = std::abs(out.estimate.mean - exact) /
          std::max(out.estimate.std_error, 1e-300);
  if (out.z > 3.0) {
    out.reseeds = 1;
    out.estimate = oracle::mc_volume(member, box, samples,
                                     base.substream(0x5EEDu), threads);
    out.z = std::abs(out.estimate.mean - exact) /
            std::max(out.estimate.std_error, 1e-300);
  }
  return out;
}

oracle::BBox symmetric_bbox(const Body& body) {
  const int n = body.dim();
  oracle::BBox box;
  box.lo.resize(n);
  box.hi.resize(n);
  std::vector<double> e(n, 0.0);
  for (int i = 0; i < n; ++i) {
    e[i] = 1.0;
    const double reach = support(body, e);
    box.lo[i] = -reach;
    box.hi[i] = reach;
    e[i] = 0.0;
  }
  return box;
}

std::vector<BodyPtr> chain_bodies(const Options& opt) {
  RngStream rng(opt.seed, kStreamChain);
  std::vector<BodyPtr> bodies;
  bodies.reserve(50);
  for (int k = 0; k < 50; ++k) {
    bodies.push_back(gen::random_body(rng, 2 + k % 4, true));
  }
  return bodies;
}

// ---------------------------------------------------------------------------
// Acceptance battery.
// ---------------------------------------------------------------------------

// 1. Closed-form capacity vs membership-grid maxima on random regions.
VerificationRecord acc_oracle_agreement(const Options& opt) {
  RngStream rng(opt.seed, kStreamOracle);
  double worst = 0.0;
  double worst_cap = 0.0, worst_oracle = 0.0;
  int worst_index = -1;
  for (int k = 0; k < 20; ++k) {
    const int dim = (k % 5 < 3) ? 2 : 3;
    const RegionPtr region = gen::random_convex_region(rng, dim);
    const double cap = capacity_convex_toric(*region).value;

    oracle::BBox box;
    box.lo.assign(dim, 0.0);
    box.hi = axis_support(*region);
    for (double& h : box.hi) h *= 2.0;
    const int resolution = dim == 2 ? 2000 : 200;
    const auto member = [&region](std::span<const double> w) {
      return region_contains(*region, w);
    };
    const std::vector<double> maxima =
        oracle::grid_axis_maxima(member, box, resolution);
    const double oracle_cap =
        *std::min_element(maxima.begin(), maxima.end());

    const double dev = rel_to(cap, oracle_cap);
    if (dev > worst) {
      worst = dev;
      worst_cap = cap;
      worst_oracle = oracle_cap;
      worst_index = k;
    }
  }
  return VerificationRecord::make(
      "thm1.5/oracle", 1e-5, -worst,
      {{"worst_rel_dev", worst},
       {"worst_capacity", worst_cap},
       {"worst_oracle", worst_oracle},
       {"worst_index", static_cast<double>(worst_index)},
       {"regions", 20.0}});
}

// 2. Simplex at level pi has capacity pi in every dimension.
VerificationRecord acc_simplex_normalization(const Options&) {
  double worst = 0.0;
  for (int n = 1; n <= 5; ++n) {
    const double cap =
        capacity_convex_toric(*Region::simplex(num::kPi, n)).value;
    worst = std::max(worst, rel_to(cap, num::kPi));
  }
  return VerificationRecord::make("normalization/simplex", 1e-12, -worst,
                                  {{"worst_rel_dev", worst}});
}

// 3. Cube-product rule on the l_p ball table, with the toric cross-check.
VerificationRecord acc_cube_product_table(const Options&) {
  const double ps[] = {1.0, 1.5, 2.0, 3.0, kInf};
  double worst_value = 0.0;
  double worst_cross = 0.0;
  for (int n = 2; n <= 4; ++n) {
    for (double p : ps) {
      const CapacityReport report =
          capacity_cube_product(Body::lp_ball(n, p));
      worst_value = std::max(worst_value, rel_to(report.value, 4.0));
      worst_cross = std::max(worst_cross, -report.checks.at(0).slack);
    }
  }
  const double margin =
      std::min(1e-10 - worst_value, 1e-9 - worst_cross);
  return margin_record("cor1.7/cube-product", margin,
                       {{"worst_value_rel_dev", worst_value},
                        {"worst_crosscheck_dev", worst_cross},
                        {"value_tol", 1e-10},
                        {"crosscheck_tol", 1e-9}});
}

// 4. Self-polar chain: dual axis inequality and the final bound <= 4.
VerificationRecord acc_chain_bound(const Options& opt) {
  double worst = kInf;
  double worst_dual = kInf, worst_final = kInf;
  for (const BodyPtr& body : chain_bodies(opt)) {
    const VerificationRecord r = selfpolar_capacity_bound(body);
    worst = std::min(worst, r.slack);
    worst_dual = std::min(worst_dual, r.quantities.at("worst_dual_gap"));
    worst_final = std::min(worst_final, 4.0 - r.quantities.at("bound"));
  }
  return VerificationRecord::make("lemma3.1/chain", 1e-9, worst,
                                  {{"worst_dual_gap", worst_dual},
                                   {"worst_bound_slack", worst_final},
                                   {"bodies", 50.0}});
}

// 5. Saint-Raymond bound: equality on Hanner polytopes, inequality on
// random unconditional bodies.
VerificationRecord acc_hanner_saint_raymond(const Options& opt) {
  double worst_hanner = 0.0;
  int hanner_count = 0;
  for (int n = 2; n <= 5; ++n) {
    double fact = 1.0;
    for (int k = 2; k <= n; ++k) fact *= k;
    const double four_n = std::pow(4.0, n);
    for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
      std::vector<double> spec(n - 1);
      for (int b = 0; b < n - 1; ++b) {
        spec[b] = (mask >> b) & 1 ? kInf : 1.0;
      }
      const double m = mahler(*hanner(spec));
      worst_hanner = std::max(worst_hanner, rel_to(fact * m, four_n));
      ++hanner_count;
    }
  }

  RngStream rng(opt.seed, kStreamHanner);
  double worst_random = kInf;
  for (int k = 0; k < 50; ++k) {
    const int n = 2 + k % 4;
    double fact = 1.0;
    for (int j = 2; j <= n; ++j) fact *= j;
    const BodyPtr body = gen::random_body(rng, n, true);
    worst_random =
        std::min(worst_random, fact * mahler(*body) - std::pow(4.0, n));
  }

  const double margin = std::min(1e-10 - worst_hanner, worst_random + 1e-9);
  return margin_record("thm1.9/hanner", margin,
                       {{"worst_hanner_rel_dev", worst_hanner},
                        {"hanner_count", static_cast<double>(hanner_count)},
                        {"worst_random_slack", worst_random},
                        {"equality_tol", 1e-10},
                        {"inequality_tol", 1e-9}});
}

// 6. Mahler scan battery over n = 2..10 (plus the constant n = 1 case).
VerificationRecord acc_mahler_scan(const Options&) {
  double margin = kInf;
  double worst_endpoint = 0.0, min_phi_interior = kInf, worst_phi2 = 0.0;
  double worst_phi1 = 0.0;
  bool all_increasing = true;
  for (int n = 2; n <= 10; ++n) {
    const MahlerScan scan = monotonicity_scan(n, 1000);
    all_increasing = all_increasing && scan.strictly_increasing;
    worst_endpoint = std::max(
        {worst_endpoint, scan.endpoint_left_rel_dev, scan.endpoint_right_rel_dev});
    for (size_t i = 1; i + 1 < scan.p_grid.size(); ++i) {
      min_phi_interior = std::min(min_phi_interior, scan.phi_values[i]);
    }
    worst_phi2 = std::max(worst_phi2, std::abs(phi(n, 2.0)));
    double harmonic_tail = 0.0;
    for (int k = 2; k <= n; ++k) harmonic_tail += 1.0 / k;
    worst_phi1 = std::max(worst_phi1, std::abs(phi(n, 1.0) - harmonic_tail));
  }
  double worst_phi_n1 = 0.0;
  for (int i = 0; i <= 100; ++i) {
    worst_phi_n1 = std::max(worst_phi_n1, std::abs(phi(1, 1.0 + i / 100.0)));
  }
  margin = std::min({all_increasing ? 1.0 : -1.0,
                     1e-12 - worst_endpoint, min_phi_interior,
                     1e-12 - worst_phi2, 1e-12 - worst_phi1,
                     1e-12 - worst_phi_n1});
  return margin_record("sec4/mahler-scan", margin,
                       {{"strictly_increasing", all_increasing ? 1.0 : 0.0},
                        {"worst_endpoint_rel_dev", worst_endpoint},
                        {"min_phi_interior", min_phi_interior},
                        {"worst_phi_at_2", worst_phi2},
                        {"worst_phi_at_1_dev", worst_phi1},
                        {"worst_phi_n1", worst_phi_n1},
                        {"endpoint_tol", 1e-12}});
}

// 7. Closed-form derivative vs central finite differences.
VerificationRecord acc_derivative_fd(const Options&) {
  const int ns[] = {2, 3, 5, 8};
  const double ps[] = {1.2, 1.5, 1.8};
  const double h = 1e-4;
  double worst = 0.0;
  for (int n : ns) {
    for (double p : ps) {
      const double closed = mahler_derivative(n, p);
      const double fd = oracle::finite_difference(
          [n](double x) { return mahler_lp(n, x); }, p, h);
      worst = std::max(worst, rel_to(closed, fd));
    }
  }
  return VerificationRecord::make("sec4/derivative-fd", 1e-6, -worst,
                                  {{"worst_rel_dev", worst}, {"fd_step", h}});
}

// 8. Phi integral identity and the sign pattern of its factors.
VerificationRecord acc_phi_integral(const Options&) {
  const int ns[] = {2, 3, 5};
  const double ps[] = {1.25, 1.5, 1.75};
  double worst_gap = 0.0;
  for (int n : ns) {
    for (double p : ps) {
      worst_gap = std::max(worst_gap, -phi_integral_check(n, p).slack);
    }
  }
  double min_f_excess = kInf, max_g = -kInf;
  constexpr int kGrid = 10000;
  for (int n = 2; n <= 10; ++n) {
    const double a = 1.0 / n;
    for (int k = 1; k < kGrid; ++k) {
      const double y = static_cast<double>(k) / kGrid;
      min_f_excess = std::min(min_f_excess, phi_integrand_f(n, y) - 1.0);
      max_g = std::max(max_g, phi_integrand_g(a, y));
    }
  }
  const double margin =
      std::min({1e-7 - worst_gap, min_f_excess, -max_g});
  return margin_record("claim4.2/integral", margin,
                       {{"worst_integral_gap", worst_gap},
                        {"min_f_minus_one", min_f_excess},
                        {"max_g", max_g},
                        {"integral_tol", 1e-7}});
}

// 9. Capacity branch table for X_p.
VerificationRecord acc_branch_table(const Options&) {
  const double g43 = num::gamma_fn(4.0 / 3.0);
  const double table[][2] = {
      {1.0, num::kPi / 2.0},
      {1.5, 2.0 * num::kPi * std::pow(4.0, -2.0 / 3.0)},
      {2.0, num::kPi},
      {3.0, 4.0 * g43 * g43 / num::gamma_fn(5.0 / 3.0)},
      {kInf, 4.0},
  };
  double worst = 0.0;
  for (const auto& row : table) {
    worst = std::max(worst, rel_to(xp_capacity(row[0]).value, row[1]));
  }
  const CapacityReport at2 = xp_capacity(2.0);
  const double branch_gap = -at2.checks.at(0).slack;
  worst = std::max(worst, branch_gap);
  return VerificationRecord::make("eq4.1/branches", 1e-12, -worst,
                                  {{"worst_rel_dev", worst},
                                   {"p2_branch_gap", branch_gap}});
}

// 10. Omega_p transport: sampled-curve area vs Monte Carlo volume of X_p,
// and the capacity read off the sampled region.
VerificationRecord acc_omega_transport(const Options& opt) {
  const double ps[] = {1.0, 1.5, 2.0, 3.0, kInf};
  RngStream rng(opt.seed, kStreamMc);
  double worst_z = 0.0;
  int reseeds = 0;
  double worst_cap_dev = 0.0;
  for (int i = 0; i < 5; ++i) {
    const double p = ps[i];
    const int points = std::isinf(p) ? 20001 : 4097;
    const double area = omega_p_area(p, points);

    const BodyPtr body = xp_unit_body(p);
    oracle::BBox box;
    box.lo.assign(4, -1.0);
    box.hi.assign(4, 1.0);
    const auto member = [&body](std::span<const double> x) {
      return contains(*body, x);
    };
    const McCheck mc = mc_check(member, box, opt.mc_samples, opt.threads,
                                rng.substream(i), area);
    worst_z = std::max(worst_z, mc.z);
    reseeds += mc.reseeds;

    if (p <= 2.0) {
      const RegionPtr region = omega_p_region(p, points);
      const double cap = capacity_convex_toric(*region).value;
      worst_cap_dev =
          std::max(worst_cap_dev, rel_to(cap, xp_capacity(p).value));
    }
  }
  const RegionPtr region_inf = omega_p_region(kInf, 20001);
  const double width = gromov_width_concave(*region_inf).value;
  const double width_dev = std::abs(width - 4.0);

  const double margin = std::min(
      {3.0 - worst_z, 1e-5 - worst_cap_dev, 1e-6 - width_dev});
  return margin_record("remark5.1/transport", margin,
                       {{"worst_mc_z", worst_z},
                        {"reseeds", static_cast<double>(reseeds)},
                        {"worst_capacity_rel_dev", worst_cap_dev},
                        {"width_dev", width_dev},
                        {"mc_samples", static_cast<double>(opt.mc_samples)},
                        {"capacity_tol", 1e-5},
                        {"width_tol", 1e-6}});
}

// 11. Polarity: involution, Mahler affine invariance, l_p duality.
VerificationRecord acc_duality_suite(const Options& opt) {
  RngStream rng(opt.seed, kStreamDuality);
  double worst_invol = 0.0;
  for (int k = 0; k < 30; ++k) {
    const int dim = 1 + k % 5;
    const BodyPtr body = gen::random_body(rng, dim, false);
    const BodyPtr twice = polar(polar(body));
    for (int s = 0; s < 20; ++s) {
      const std::vector<double> x = gen::random_point(rng, dim, 2.0);
      const double g0 = gauge(*body, x);
      const double g2 = gauge(*twice, x);
      worst_invol = std::max(worst_invol, rel_to(g2, g0));
    }
  }

  double worst_mahler = 0.0;
  for (int k = 0; k < 20; ++k) {
    const int dim = 2 + k % 4;
    const BodyPtr body = gen::random_body(rng, dim, false);
    const Matrix map = gen::random_well_conditioned(rng, dim);
    worst_mahler = std::max(
        worst_mahler, rel_to(mahler(*Body::linear_image(map, body)),
                             mahler(*body)));
  }

  double worst_dual = 0.0;
  const double ps[] = {1.0, 1.3, 2.0, 2.7, 4.0, kInf};
  for (double p : ps) {
    const int n = 3;
    const BodyPtr direct = Body::lp_ball(n, dual_exponent(p));
    const BodyPtr via_polar = polar(Body::lp_ball(n, p));
    for (int s = 0; s < 50; ++s) {
      const std::vector<double> x = gen::random_point(rng, n, 2.0);
      worst_dual = std::max(
          worst_dual, rel_to(gauge(*via_polar, x), gauge(*direct, x)));
    }
  }

  const double margin = std::min(
      {1e-10 - worst_invol, 1e-9 - worst_mahler, 1e-12 - worst_dual});
  return margin_record("polar/duality", margin,
                       {{"worst_involution_rel_dev", worst_invol},
                        {"worst_mahler_rel_dev", worst_mahler},
                        {"worst_lp_dual_rel_dev", worst_dual},
                        {"involution_tol", 1e-10},
                        {"mahler_tol", 1e-9},
                        {"lp_dual_tol", 1e-12}});
}

// 12. Volume-capacity inequality on random regions and the self-polar family.
VerificationRecord acc_viterbo_battery(const Options& opt) {
  RngStream rng(opt.seed, kStreamViterbo);
  double worst_region = kInf;
  for (int k = 0; k < 20; ++k) {
    const RegionPtr region = gen::random_convex_region(rng, 2 + k % 2);
    worst_region = std::min(worst_region, viterbo_check(*region).slack);
  }
  double worst_selfpolar = kInf;
  for (const BodyPtr& body : chain_bodies(opt)) {
    const VerificationRecord r = selfpolar_viterbo_check(body);
    worst_selfpolar = std::min(
        worst_selfpolar, r.slack / r.quantities.at("capacity_power"));
  }
  const double worst = std::min(worst_region, worst_selfpolar);
  return VerificationRecord::make("viterbo/instances", 1e-9, worst,
                                  {{"worst_region_slack", worst_region},
                                   {"worst_selfpolar_slack_rel", worst_selfpolar},
                                   {"regions", 20.0},
                                   {"selfpolar_bodies", 50.0}});
}

// ---------------------------------------------------------------------------
// Module suites.
// ---------------------------------------------------------------------------

std::vector<VerificationRecord> suite_numerics(const Options& opt) {
  std::vector<VerificationRecord> out;

  double worst_gamma = 0.0;
  for (double x = 0.5; x <= 170.0; x += 0.75) {
    worst_gamma = std::max(
        worst_gamma, rel_to(num::gamma_fn(x + 1.0), x * num::gamma_fn(x)));
  }
  out.push_back(VerificationRecord::make("gamma/recurrence", 1e-12,
                                         -worst_gamma,
                                         {{"worst_rel_dev", worst_gamma}}));

  double worst_psi = 0.0;
  for (double x = 0.5; x <= 50.0; x += 0.5) {
    worst_psi = std::max(
        worst_psi,
        std::abs(num::digamma(x + 1.0) - num::digamma(x) - 1.0 / x));
  }
  out.push_back(VerificationRecord::make("digamma/recurrence", 1e-12,
                                         -worst_psi,
                                         {{"worst_abs_dev", worst_psi}}));

  double worst_dirichlet = 0.0;
  for (double x : {1.0, 1.5, 2.5, 5.0, 10.0}) {
    const double integral = num::integrate(
        [x](double t) {
          return -std::expm1((x - 1.0) * std::log(t)) / (1.0 - t);
        },
        0.0, 1.0, {1e-10, 20000});
    const double via_integral = -num::kEulerGamma + integral;
    worst_dirichlet =
        std::max(worst_dirichlet, std::abs(via_integral - num::digamma(x)));
  }
  out.push_back(VerificationRecord::make("digamma/dirichlet-agreement",
                                         opt.tol, -worst_dirichlet,
                                         {{"worst_abs_dev", worst_dirichlet}}));

  const double half = num::gamma_fn(0.5);
  out.push_back(VerificationRecord::make(
      "gamma/half-integer", 1e-13, -rel_to(half, std::sqrt(num::kPi)),
      {{"gamma_half", half}}));

  auto f = [](double x) { return x * x * x - 2.0 * x; };
  auto g = [](double x) { return x * x + 1.0; };
  const double alpha = 2.5, beta = -1.25;
  const double combined = num::integrate(
      [&](double x) { return alpha * f(x) + beta * g(x); }, 0.0, 2.0);
  const double separate = alpha * num::integrate(f, 0.0, 2.0) +
                          beta * num::integrate(g, 0.0, 2.0);
  out.push_back(VerificationRecord::make(
      "quadrature/linearity", 1e-9, -std::abs(combined - separate),
      {{"combined", combined}, {"separate", separate}}));

  const double singular =
      num::integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0,
                     {1e-9, 20000});
  out.push_back(VerificationRecord::make(
      "quadrature/endpoint-singularity", opt.tol, -std::abs(singular - 2.0),
      {{"integral", singular}}));

  const double sine = num::integrate([](double x) { return std::sin(x); },
                                     0.0, num::kPi);
  out.push_back(VerificationRecord::make("quadrature/sine", 1e-12,
                                         -std::abs(sine - 2.0),
                                         {{"integral", sine}}));

  const double zero = num::integrate([](double) { return 0.0; }, 0.0, 1.0);
  out.push_back(VerificationRecord::make("quadrature/zero", 0.0, -std::abs(zero),
                                         {{"integral", zero}}));

  RngStream a(opt.seed, 7);
  RngStream b(opt.seed, 7);
  double worst_rng = 0.0;
  for (int i = 0; i < 1000; ++i) {
    worst_rng = std::max(worst_rng,
                         std::abs(a.next_double() - b.next_double()));
  }
  out.push_back(VerificationRecord::make("rng/determinism", 0.0, -worst_rng,
                                         {{"worst_dev", worst_rng}}));
  return out;
}

std::vector<VerificationRecord> suite_oracles(const Options& opt) {
  std::vector<VerificationRecord> out;
  RngStream rng(opt.seed, 301);

  // Same stream, different thread counts: identical estimate.
  {
    const BodyPtr ball = Body::lp_ball(3, 2.0);
    const auto member = [&ball](std::span<const double> x) {
      return contains(*ball, x);
    };
    const oracle::BBox box = symmetric_bbox(*ball);
    const MCEstimate one =
        oracle::mc_volume(member, box, 40000, rng.substream(1), 1);
    const MCEstimate three =
        oracle::mc_volume(member, box, 40000, rng.substream(1), 3);
    out.push_back(VerificationRecord::make(
        "mc/shard-independence", 0.0, -std::abs(one.mean - three.mean),
        {{"threads1", one.mean}, {"threads3", three.mean}}));
  }

  // Cube in its own bounding box: every sample hits.
  {
    const BodyPtr cube = Body::lp_ball(2, kInf);
    const auto member = [&cube](std::span<const double> x) {
      return contains(*cube, x);
    };
    const MCEstimate est = oracle::mc_volume(member, symmetric_bbox(*cube),
                                             20000, rng.substream(2), 1);
    out.push_back(VerificationRecord::make("mc/cube-exact", 0.0,
                                           -std::abs(est.mean - 4.0),
                                           {{"mean", est.mean}}));
  }

  // Disk area within the re-seed policy.
  {
    const BodyPtr disk = Body::lp_ball(2, 2.0);
    const auto member = [&disk](std::span<const double> x) {
      return contains(*disk, x);
    };
    const McCheck mc =
        mc_check(member, symmetric_bbox(*disk),
                 std::min<long long>(opt.mc_samples, 200000), opt.threads,
                 rng.substream(3), num::kPi);
    out.push_back(VerificationRecord::make(
        "mc/disk-3sigma", 0.0, 3.0 - mc.z,
        {{"z", mc.z},
         {"mean", mc.estimate.mean},
         {"std_error", mc.estimate.std_error},
         {"reseeds", static_cast<double>(mc.reseeds)}}));
  }

  // grid_support brackets the true support for convex bodies.
  {
    double worst_lower = kInf, worst_upper = kInf;
    for (int k = 0; k < 6; ++k) {
      const int dim = 2 + k % 2;
      const BodyPtr body = gen::random_body(rng, dim, true);
      const oracle::BBox box = symmetric_bbox(*body);
      const auto member = [&body](std::span<const double> x) {
        return contains(*body, x);
      };
      double pitch = 0.0;
      for (int i = 0; i < dim; ++i) {
        pitch = std::max(pitch, (box.hi[i] - box.lo[i]) / 64.0);
      }
      std::vector<double> v(dim);
      for (double& vi : v) vi = rng.uniform(0.0, 1.0);
      const double grid = oracle::grid_support(member, box, v, 64);
      const double exact = support(*body, v);
      double v1 = 0.0;
      for (double vi : v) v1 += std::abs(vi);
      worst_lower = std::min(worst_lower, exact - grid);
      worst_upper = std::min(worst_upper, grid + v1 * pitch - exact);
    }
    out.push_back(margin_record("grid-support/bracket",
                                std::min(worst_lower + 1e-12, worst_upper),
                                {{"worst_lower_slack", worst_lower},
                                 {"worst_upper_slack", worst_upper}}));
  }

  // Doubling the resolution never lowers the estimate (nested grids).
  {
    double worst = kInf;
    for (int k = 0; k < 5; ++k) {
      const BodyPtr body = gen::random_body(rng, 2, true);
      const oracle::BBox box = symmetric_bbox(*body);
      const auto member = [&body](std::span<const double> x) {
        return contains(*body, x);
      };
      std::vector<double> v{rng.uniform(0.0, 1.0), rng.uniform(0.0, 1.0)};
      const double coarse = oracle::grid_support(member, box, v, 40);
      const double fine = oracle::grid_support(member, box, v, 80);
      worst = std::min(worst, fine - coarse);
    }
    out.push_back(margin_record("grid-support/refinement-monotone",
                                worst + 1e-15, {{"worst_gain", worst}}));
  }

  // Shoelace on known polygons, including rotation invariance.
  {
    const std::array<double, 2> square[] = {
        {0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}};
    const double sq = oracle::shoelace_area(square);
    const double theta = 0.7;
    const double c = std::cos(theta), s = std::sin(theta);
    std::vector<std::array<double, 2>> rotated;
    for (const auto& pt : square) {
      rotated.push_back({c * pt[0] - s * pt[1], s * pt[0] + c * pt[1]});
    }
    const double rot = oracle::shoelace_area(rotated);
    const double worst =
        std::max(std::abs(sq - 1.0), std::abs(rot - 1.0));
    out.push_back(VerificationRecord::make(
        "shoelace/known-areas", 1e-12, -worst,
        {{"square", sq}, {"rotated_square", rot}}));
  }

  // Central differences reproduce cos as the derivative of sin.
  {
    double worst = 0.0;
    for (double x : {0.3, 1.0, 2.2}) {
      const double fd = oracle::finite_difference(
          [](double t) { return std::sin(t); }, x, 1e-6);
      worst = std::max(worst, std::abs(fd - std::cos(x)));
    }
    out.push_back(VerificationRecord::make("finite-difference/sine", 1e-9,
                                           -worst,
                                           {{"worst_abs_dev", worst}}));
  }
  return out;
}

std::vector<VerificationRecord> suite_bodies(const Options& opt) {
  std::vector<VerificationRecord> out;
  RngStream rng(opt.seed, kStreamBodies);

  double worst_homog = 0.0;
  for (int k = 0; k < 20; ++k) {
    const int dim = 1 + k % 6;
    const BodyPtr body = gen::random_body(rng, dim, k % 2 == 0);
    for (double t : {0.25, -1.5, 3.0}) {
      const std::vector<double> x = gen::random_point(rng, dim, 2.0);
      std::vector<double> tx = x;
      for (double& c : tx) c *= t;
      const double lhs = gauge(*body, tx);
      const double rhs = std::abs(t) * gauge(*body, x);
      worst_homog = std::max(worst_homog, rel_to(lhs, rhs));
    }
  }
  out.push_back(VerificationRecord::make("gauge/homogeneity", 1e-10,
                                         -worst_homog,
                                         {{"worst_rel_dev", worst_homog}}));

  double worst_polarity = kInf;
  for (int k = 0; k < 20; ++k) {
    const int dim = 1 + k % 5;
    const BodyPtr body = gen::random_body(rng, dim, false);
    for (int s = 0; s < 10; ++s) {
      std::vector<double> x = gen::random_point(rng, dim, 2.0);
      const double gx = gauge(*body, x);
      if (gx == 0.0) continue;
      for (double& c : x) c *= 0.999 / gx;  // pull strictly inside
      const std::vector<double> v = gen::random_point(rng, dim, 2.0);
      double dot = 0.0;
      for (int i = 0; i < dim; ++i) dot += v[i] * x[i];
      const double h = support(*body, v);
      worst_polarity =
          std::min(worst_polarity, (h - dot) / (1.0 + std::abs(h)));
    }
  }
  out.push_back(VerificationRecord::make("polarity/support-dominates", 1e-9,
                                         worst_polarity,
                                         {{"worst_norm_slack", worst_polarity}}));

  double worst_support_polar = 0.0;
  for (int k = 0; k < 15; ++k) {
    const int dim = 1 + k % 5;
    const BodyPtr body = gen::random_body(rng, dim, false);
    const BodyPtr pol = polar(body);
    for (int s = 0; s < 10; ++s) {
      const std::vector<double> v = gen::random_point(rng, dim, 2.0);
      worst_support_polar = std::max(
          worst_support_polar, rel_to(support(*body, v), gauge(*pol, v)));
    }
  }
  out.push_back(VerificationRecord::make(
      "support/gauge-of-polar", 1e-10, -worst_support_polar,
      {{"worst_rel_dev", worst_support_polar}}));

  double worst_invol = 0.0;
  for (int k = 0; k < 12; ++k) {
    const int dim = 1 + k % 4;
    const BodyPtr body = gen::random_body(rng, dim, false);
    const BodyPtr twice = polar(polar(body));
    for (int s = 0; s < 10; ++s) {
      const std::vector<double> x = gen::random_point(rng, dim, 2.0);
      worst_invol =
          std::max(worst_invol, rel_to(gauge(*twice, x), gauge(*body, x)));
    }
  }
  out.push_back(VerificationRecord::make("polar/involution", 1e-10,
                                         -worst_invol,
                                         {{"worst_rel_dev", worst_invol}}));

  double worst_vol = 0.0;
  for (int n = 2; n <= 6; ++n) {
    for (double p : {1.0, 1.3, 2.0, 2.7, kInf}) {
      BodyPtr chain = Body::segment(1.0);
      for (int i = 1; i < n; ++i) {
        chain = std::isinf(p) ? Body::cartesian(chain, Body::segment(1.0))
                              : Body::p_product(p, chain, Body::segment(1.0));
      }
      worst_vol = std::max(
          worst_vol, rel_to(volume(*chain), volume(*Body::lp_ball(n, p))));
    }
  }
  out.push_back(VerificationRecord::make(
      "volume/pproduct-telescopes", 1e-12, -worst_vol,
      {{"worst_rel_dev", worst_vol}}));

  {
    double worst_z = 0.0;
    int reseeds = 0;
    const long long samples = std::min<long long>(opt.mc_samples, 400000);
    for (int k = 0; k < 8; ++k) {
      const int dim = 2 + k % 3;
      const BodyPtr body = gen::random_body(rng, dim, false);
      const auto member = [&body](std::span<const double> x) {
        return contains(*body, x);
      };
      const McCheck mc = mc_check(member, symmetric_bbox(*body), samples,
                                  opt.threads, rng.substream(900 + k),
                                  volume(*body));
      worst_z = std::max(worst_z, mc.z);
      reseeds += mc.reseeds;
    }
    out.push_back(margin_record("volume/mc-agreement", 3.0 - worst_z,
                                {{"worst_z", worst_z},
                                 {"reseeds", static_cast<double>(reseeds)},
                                 {"samples", static_cast<double>(samples)}}));
  }
  return out;
}

std::vector<VerificationRecord> suite_toric(const Options& opt) {
  std::vector<VerificationRecord> out;
  RngStream rng(opt.seed, kStreamToric);

  double worst_homog = 0.0;
  for (int k = 0; k < 15; ++k) {
    const int dim = 2 + k % 2;
    const RegionPtr region = gen::random_convex_region(rng, dim);
    std::vector<double> v(dim);
    for (double& vi : v) vi = rng.uniform(0.1, 2.0);
    const double t = rng.uniform(0.3, 4.0);
    std::vector<double> tv = v;
    for (double& c : tv) c *= t;
    worst_homog = std::max(worst_homog, rel_to(support_norm(*region, tv),
                                               t * support_norm(*region, v)));
  }
  out.push_back(VerificationRecord::make("support-norm/homogeneity", 1e-12,
                                         -worst_homog,
                                         {{"worst_rel_dev", worst_homog}}));

  // Membership-grid agreement along the coordinate directions (where the
  // doubled even grid puts the extreme points on nodes), plus full random
  // directions on polytopal regions whose maximizing corner is on-grid.
  {
    double worst = 0.0;
    for (int k = 0; k < 6; ++k) {
      const int dim = k < 4 ? 2 : 3;
      const RegionPtr region = gen::random_convex_region(rng, dim);
      oracle::BBox box;
      box.lo.assign(dim, 0.0);
      box.hi = axis_support(*region);
      for (double& h : box.hi) h *= 2.0;
      const int resolution = dim == 2 ? 2000 : 200;
      const auto member = [&region](std::span<const double> w) {
        return region_contains(*region, w);
      };
      const int axis = rng.next_int(0, dim - 1);
      const double t = rng.uniform(0.2, 3.0);
      std::vector<double> v(dim, 0.0);
      v[axis] = t;
      const double grid = oracle::grid_support(member, box, v, resolution);
      const double dev = std::abs(support_norm(*region, v) - grid);
      worst = std::max(worst, dev / (1.0 + t));
    }
    for (int k = 0; k < 4; ++k) {
      const int dim = 2 + k % 2;
      std::vector<double> upper(dim);
      for (double& u : upper) u = rng.uniform(0.5, 3.0);
      const RegionPtr region = k % 2 == 0
                                   ? Region::box(upper)
                                   : Region::simplex(rng.uniform(0.5, 3.0), dim);
      oracle::BBox box;
      box.lo.assign(dim, 0.0);
      box.hi = axis_support(*region);
      for (double& h : box.hi) h *= 2.0;
      const int resolution = dim == 2 ? 2000 : 200;
      const auto member = [&region](std::span<const double> w) {
        return region_contains(*region, w);
      };
      std::vector<double> v(dim);
      double norm = 1.0;
      for (double& vi : v) {
        vi = rng.uniform(0.0, 2.0);
        norm += vi;
      }
      const double grid = oracle::grid_support(member, box, v, resolution);
      worst = std::max(
          worst, std::abs(support_norm(*region, v) - grid) / norm);
    }
    out.push_back(VerificationRecord::make("support-norm/grid-oracle", 1e-6,
                                           -worst,
                                           {{"worst_scaled_dev", worst}}));
  }

  double worst_scale = 0.0;
  for (int k = 0; k < 10; ++k) {
    const RegionPtr region = gen::random_convex_region(rng, 2);
    const double r = rng.uniform(0.5, 4.0);
    worst_scale = std::max(
        worst_scale,
        rel_to(capacity_convex_toric(*Region::scale(r, region)).value,
               r * capacity_convex_toric(*region).value));
  }
  out.push_back(VerificationRecord::make("capacity/scale-equivariance", 1e-12,
                                         -worst_scale,
                                         {{"worst_rel_dev", worst_scale}}));

  double worst_mono = kInf;
  for (int k = 0; k < 10; ++k) {
    std::vector<double> small(2), big(2);
    for (int i = 0; i < 2; ++i) {
      small[i] = rng.uniform(0.5, 2.0);
      big[i] = small[i] + rng.uniform(0.0, 2.0);
    }
    worst_mono = std::min(
        worst_mono, capacity_convex_toric(*Region::box(big)).value -
                        capacity_convex_toric(*Region::box(small)).value);
  }
  out.push_back(margin_record("capacity/box-monotonicity", worst_mono + 1e-15,
                              {{"worst_gain", worst_mono}}));

  double worst_product = 0.0;
  for (int k = 0; k < 10; ++k) {
    const std::vector<RegionPtr> factors = {
        gen::random_convex_region(rng, 2), gen::random_convex_region(rng, 2)};
    const CapacityReport report = product_capacity(factors);
    worst_product = std::max(worst_product, -report.checks.at(0).slack);
  }
  out.push_back(VerificationRecord::make("capacity/product-rule", 1e-12,
                                         -worst_product,
                                         {{"worst_dev", worst_product}}));

  double worst_route = 0.0, worst_bracket = kInf;
  for (int k = 0; k < 10; ++k) {
    const RegionPtr region = gen::random_concave_region(rng);
    const CapacityReport gw = gromov_width_concave(*region);
    worst_route = std::max(worst_route, -gw.checks.at(0).slack /
                                            (1.0 + std::abs(gw.value)));
    const Interval bracket = capacity_bounds_concave(*region);
    worst_bracket = std::min(worst_bracket, bracket.upper - bracket.lower);
  }
  out.push_back(VerificationRecord::make("gromov-width/route-agreement", 1e-6,
                                         -worst_route,
                                         {{"worst_scaled_dev", worst_route}}));
  out.push_back(margin_record("bounds/bracket-order", worst_bracket + 1e-12,
                              {{"worst_width", worst_bracket}}));

  {
    const double a = 1.7;
    const VerificationRecord simplex_case =
        viterbo_check(*Region::simplex(a, 3));
    out.push_back(VerificationRecord::make(
        "viterbo/simplex-equality", 1e-12,
        -std::abs(simplex_case.quantities.at("volume") * 6.0 -
                  std::pow(simplex_case.quantities.at("capacity"), 3.0)),
        simplex_case.quantities));
  }
  return out;
}

std::vector<VerificationRecord> suite_mahler(const Options&) {
  std::vector<VerificationRecord> out;

  double min_phi = kInf, worst_phi2 = 0.0;
  for (int n = 2; n <= 10; ++n) {
    for (int i = 1; i < 1000; ++i) {
      const double p = 1.0 + static_cast<double>(i) / 1000.0;
      if (p >= 2.0) break;
      min_phi = std::min(min_phi, phi(n, p));
    }
    worst_phi2 = std::max(worst_phi2, std::abs(phi(n, 2.0)));
  }
  out.push_back(margin_record("phi/positivity",
                              std::min(min_phi, 1e-12 - worst_phi2),
                              {{"min_phi", min_phi},
                               {"worst_phi_at_2", worst_phi2}}));

  double worst_mid = kInf;
  bool increasing = true;
  for (int n = 2; n <= 10; ++n) {
    const MahlerScan scan = monotonicity_scan(n, 1000);
    increasing = increasing && scan.strictly_increasing;
    for (size_t i = 0; i + 1 < scan.p_grid.size(); ++i) {
      const double mid = 0.5 * (scan.p_grid[i] + scan.p_grid[i + 1]);
      worst_mid = std::min(worst_mid, mahler_derivative(n, mid));
    }
  }
  out.push_back(margin_record(
      "scan/monotone", std::min(increasing ? 1.0 : -1.0, worst_mid),
      {{"strictly_increasing", increasing ? 1.0 : 0.0},
       {"min_midpoint_derivative", worst_mid}}));

  double worst_fd = 0.0;
  for (int n : {2, 5}) {
    for (double p : {1.3, 1.7}) {
      const double fd = oracle::finite_difference(
          [n](double x) { return mahler_lp(n, x); }, p, 1e-4);
      worst_fd = std::max(worst_fd, rel_to(mahler_derivative(n, p), fd));
    }
  }
  out.push_back(VerificationRecord::make("derivative/fd-agreement", 1e-6,
                                         -worst_fd,
                                         {{"worst_rel_dev", worst_fd}}));

  double worst_cross = 0.0, worst_sym = 0.0;
  for (int n = 2; n <= 5; ++n) {
    for (double p : {1.0, 1.25, 1.6, 2.0, 3.5, kInf}) {
      worst_cross = std::max(
          worst_cross, rel_to(mahler_lp(n, p), mahler(*Body::lp_ball(n, p))));
      worst_sym = std::max(
          worst_sym, rel_to(mahler_lp(n, p), mahler_lp(n, dual_exponent(p))));
    }
  }
  out.push_back(VerificationRecord::make("mahler/cross-module", 1e-12,
                                         -worst_cross,
                                         {{"worst_rel_dev", worst_cross}}));
  out.push_back(VerificationRecord::make("mahler/dual-symmetry", 1e-12,
                                         -worst_sym,
                                         {{"worst_rel_dev", worst_sym}}));

  double worst_bound = kInf;
  for (int n = 2; n <= 6; ++n) {
    double fact = 1.0;
    for (int k = 2; k <= n; ++k) fact *= k;
    const double floor_value = std::pow(4.0, n) / fact;
    for (int i = 0; i <= 200; ++i) {
      const double p = 1.0 + i / 200.0;
      worst_bound =
          std::min(worst_bound, (mahler_lp(n, p) - floor_value) / floor_value);
    }
  }
  out.push_back(margin_record("mahler/lower-bound", worst_bound + 1e-12,
                              {{"worst_scaled_slack", worst_bound}}));
  return out;
}

std::vector<VerificationRecord> suite_lagrangian(const Options& opt) {
  std::vector<VerificationRecord> out;
  RngStream rng(opt.seed, kStreamLagrangian);

  double worst_cross = 0.0;
  for (int k = 0; k < 10; ++k) {
    const BodyPtr body = gen::random_body(rng, 2 + k % 3, true);
    const CapacityReport report = capacity_cube_product(body);
    worst_cross = std::max(worst_cross, -report.checks.at(0).slack);
  }
  out.push_back(VerificationRecord::make("cor1.7/random-crosscheck", 1e-9,
                                         -worst_cross,
                                         {{"worst_dev", worst_cross}}));

  double worst_chain = kInf;
  for (int k = 0; k < 20; ++k) {
    const BodyPtr body = gen::random_body(rng, 2 + k % 3, true);
    worst_chain = std::min(worst_chain, selfpolar_capacity_bound(body).slack);
  }
  out.push_back(VerificationRecord::make("lemma3.1/random-chain", 1e-9,
                                         worst_chain,
                                         {{"worst_slack", worst_chain}}));

  double worst_lp = 0.0;
  for (int n : {2, 3}) {
    for (double p : {1.0, 1.5, 2.0, 3.0, kInf}) {
      const CapacityReport report = selfpolar_capacity_lp(n, p);
      worst_lp = std::max(worst_lp, rel_to(report.value, 4.0));
      for (const VerificationRecord& check : report.checks) {
        if (!check.passed) worst_lp = std::max(worst_lp, 1.0);
      }
    }
  }
  out.push_back(VerificationRecord::make("cor1.11/family", 1e-12, -worst_lp,
                                         {{"worst_rel_dev", worst_lp}}));

  double worst_sym = 0.0;
  for (double p : {1.5, kInf}) {
    const double vmax = std::isinf(p) ? 1.0 : std::pow(0.25, 1.0 / p);
    for (int i = 0; i <= 16; ++i) {
      const double v = vmax * i / 16.0;
      const std::array<double, 2> plus = xp_curve(p, v);
      const std::array<double, 2> minus = xp_curve(p, -v);
      worst_sym = std::max(worst_sym, std::abs(plus[0] - minus[1]));
      worst_sym = std::max(worst_sym, std::abs(plus[1] - minus[0]));
    }
  }
  out.push_back(VerificationRecord::make("gamma-curve/mirror-symmetry", 1e-12,
                                         -worst_sym,
                                         {{"worst_abs_dev", worst_sym}}));

  double worst_mono = kInf;
  for (double p : {1.0, 2.0, 3.0}) {
    const double vmax = std::pow(0.25, 1.0 / p);
    double prev = xp_gp(p, 0.0);
    for (int i = 1; i <= 24; ++i) {
      const double v = vmax * i / 24.0;
      const double cur = xp_gp(p, v);
      worst_mono = std::min(worst_mono, prev - cur);
      prev = cur;
    }
  }
  out.push_back(margin_record("gp/strictly-decreasing", worst_mono,
                              {{"worst_drop", worst_mono}}));

  double worst_area = 0.0;
  for (double p : {1.5, kInf}) {
    const double area = omega_p_area(p, 4097);
    const double vol = volume(*xp_unit_body(p));
    worst_area = std::max(worst_area, rel_to(area, vol));
    worst_area = std::max(
        worst_area, rel_to(region_volume(*omega_p_region(p, 4097)), area));
  }
  out.push_back(VerificationRecord::make("omega/area-consistency", 1e-4,
                                         -worst_area,
                                         {{"worst_rel_dev", worst_area}}));

  {
    const LagrangianProduct product(Body::lp_ball(2, 1.5),
                                    polar(Body::lp_ball(2, 1.5)));
    const double direct = product.volume();
    const double via_mahler = mahler(*Body::lp_ball(2, 1.5));
    out.push_back(VerificationRecord::make(
        "product/volume-is-mahler", 1e-12, -rel_to(direct, via_mahler),
        {{"product_volume", direct}, {"mahler", via_mahler}}));
  }
  return out;
}

std::vector<VerificationRecord> suite_acceptance(const Options& opt) {
  return run_acceptance(opt);
}

using SuiteFn = std::vector<VerificationRecord> (*)(const Options&);

const std::pair<const char*, SuiteFn> kSuites[] = {
    {"numerics", suite_numerics}, {"oracles", suite_oracles},
    {"bodies", suite_bodies},     {"toric", suite_toric},
    {"mahler", suite_mahler},     {"lagrangian", suite_lagrangian},
    {"acceptance", suite_acceptance},
};

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : kSuites) names.emplace_back(name);
  names.emplace_back("all");
  return names;
}

std::vector<VerificationRecord> run_suite(const std::string& name,
                                          const Options& options) {
  if (name == "all") {
    std::vector<VerificationRecord> out;
    for (const auto& [suite_name, fn] : kSuites) {
      std::vector<VerificationRecord> part = fn(options);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  for (const auto& [suite_name, fn] : kSuites) {
    if (name == suite_name) return fn(options);
  }
  throw Error(ErrorCode::kInvalidArgument,
              "run_suite: unknown suite \"" + name + "\"");
}

std::vector<VerificationRecord> run_acceptance(const Options& options) {
  return {
      acc_oracle_agreement(options),  acc_simplex_normalization(options),
      acc_cube_product_table(options), acc_chain_bound(options),
      acc_hanner_saint_raymond(options), acc_mahler_scan(options),
      acc_derivative_fd(options),     acc_phi_integral(options),
      acc_branch_table(options),      acc_omega_transport(options),
      acc_duality_suite(options),     acc_viterbo_battery(options),
  };
}

bool all_passed(const std::vector<VerificationRecord>& records) {
  return std::all_of(records.begin(), records.end(),
                     [](const VerificationRecord& r) { return r.passed; });
}

}  // namespace symcap::verify
