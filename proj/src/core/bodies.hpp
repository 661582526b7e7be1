#pragma once

#include <memory>
#include <span>
#include <vector>

#include "core/linalg.hpp"

namespace symcap {

class Body;
using BodyPtr = std::shared_ptr<const Body>;

enum class BodyKind { kSegment, kLpBall, kCartesian, kPProduct, kLinearImage };

/// Immutable expression tree of centrally symmetric convex bodies.
///
/// Leaves are segments [-r, r] and l_p balls; interior nodes combine children
/// by Cartesian product, p-product (gauge = l_p combination of child gauges),
/// or an invertible linear image. Nodes are shared through BodyPtr and are
/// safe to use concurrently.
class Body {
 public:
  static BodyPtr segment(double radius);
  static BodyPtr lp_ball(int dim, double p);  // p in [1, inf]
  static BodyPtr cartesian(BodyPtr left, BodyPtr right);
  static BodyPtr p_product(double p, BodyPtr left, BodyPtr right);
  static BodyPtr linear_image(const Matrix& map, BodyPtr child);

  BodyKind kind() const { return kind_; }
  int dim() const { return dim_; }
  double radius() const { return radius_; }
  double p() const { return p_; }
  const BodyPtr& left() const { return left_; }
  const BodyPtr& right() const { return right_; }
  const BodyPtr& child() const { return left_; }
  const Matrix& map() const { return map_; }
  const Matrix& inverse_map() const { return inverse_map_; }

 private:
  Body() = default;

  BodyKind kind_ = BodyKind::kSegment;
  int dim_ = 0;
  double radius_ = 0.0;  // segment
  double p_ = 0.0;       // lp ball / p-product
  BodyPtr left_, right_;
  Matrix map_, inverse_map_;  // linear image
};

/// Dual exponent: 1/p + 1/q = 1, with 1 <-> inf.
double dual_exponent(double p);

/// Gauge (Minkowski functional) of x with respect to the body.
double gauge(const Body& body, std::span<const double> x);

/// Membership test with a 1e-9 relative slack so exact boundary points pass.
bool contains(const Body& body, std::span<const double> x);

/// Polar body, produced by structural rewriting of the expression tree.
BodyPtr polar(const BodyPtr& body);

/// Support function h_K(v) = gauge of v in the polar body.
double support(const Body& body, std::span<const double> v);

/// Euclidean volume, in closed form.
double volume(const Body& body);

/// Mahler volume vol(K) * vol(K polar).
double mahler(const Body& body);

/// True if the tree is invariant under coordinate sign flips: every linear
/// image in it is diagonal.
bool is_coordinate_unconditional(const Body& body);

/// Hanner polytope of dimension n from a list of n-1 exponents, each 1 or
/// inf: a left-associated chain of l_1 / l_inf sums of unit segments.
BodyPtr hanner(std::span<const double> exponents);

}  // namespace symcap
