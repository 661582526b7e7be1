#pragma once

#include <array>
#include <span>
#include <vector>

#include "core/bodies.hpp"
#include "core/records.hpp"
#include "core/toric.hpp"

namespace symcap {

/// Product K x M of two bodies of equal dimension, sitting in phase space
/// with K in the position factor and M in the momentum factor.
struct LagrangianProduct {
  BodyPtr position;
  BodyPtr momentum;

  LagrangianProduct(BodyPtr k, BodyPtr m);
  int factor_dim() const { return position->dim(); }
  bool contains(std::span<const double> xy) const;  // xy has size 2 * factor_dim
  double volume() const;
};

/// Capacity of [-1,1]^n x A for a coordinate-unconditional body A:
/// 4 * min_i (axis reach of A), cross-checked against the toric route
/// through the scaled moment region.
CapacityReport capacity_cube_product(const BodyPtr& a);

/// The two-step bound c(A x A polar) <= 4 for unconditional A, via the
/// scaling radius r and the dual axis-reach inequality. The record's slack is
/// the worst step of the chain.
VerificationRecord selfpolar_capacity_bound(const BodyPtr& a);

/// Volume-capacity consistency for A x A polar: n! * mahler(A) >= 4^n.
VerificationRecord selfpolar_viterbo_check(const BodyPtr& a);

/// c(B_p^n x B_q^n) = 4 for the dual pair p, q: upper bound from the chain,
/// lower bound from the known width of the product, endpoint cross-checks at
/// p in {1, inf}.
CapacityReport selfpolar_capacity_lp(int n, double p);

/// The domain X_p in R^4: the l_p combination of the two Lagrangian unit
/// discs (position pair, momentum pair), as a body expression.
BodyPtr xp_unit_body(double p);

/// Capacity of the domain X_p in R^4, by the closed-form branch table.
CapacityReport xp_capacity(double p);

/// g_p(v) = 2 * int_{r_-}^{r_+} sqrt((1 - r^p)^(2/p) - v^2 / r^2) dr over the
/// ascending limits r_-+ = (1/2 -+ sqrt(1/4 - v^p))^(1/p); v in [0, (1/4)^(1/p)],
/// finite p >= 1.
double xp_gp(double p, double v);

/// Moment-image boundary curve of X_p at parameter v in [-v_max, v_max];
/// returns (w1, w2). Finite p uses g_p on mirrored branches, p = inf the
/// closed trigonometric form on [-1, 1].
std::array<double, 2> xp_curve(double p, double v);

/// Cosine-spaced samples (v, w1, w2) across the full parameter range.
std::vector<std::array<double, 3>> xp_curve_samples(double p, int points);

/// The moment image Omega_p as a table-backed graph region.
RegionPtr omega_p_region(double p, int points = 4096);

/// Polygon area of the sampled Omega_p.
double omega_p_area(double p, int points = 4096);

/// Membership in X_p (dimension-4 points), with boundary slack.
bool xp_membership(double p, std::span<const double> x);

}  // namespace symcap
