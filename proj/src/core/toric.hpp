#pragma once

#include <memory>
#include <span>
#include <variant>
#include <vector>

#include "core/bodies.hpp"
#include "core/records.hpp"

namespace symcap {

class Region;
using RegionPtr = std::shared_ptr<const Region>;

enum class RegionKind { kBox, kSimplex, kOrthant, kGraph2D, kProduct, kScale };

/// Boundary profile of a 2-dimensional graph region
/// { (x, y) : 0 <= x < a, 0 <= y < f(x) } for nonincreasing f with f(0) > 0.
namespace graph_fn {
struct Table {
  std::vector<double> x;  // strictly increasing, x.front() == 0, x.back() == a
  std::vector<double> y;  // nonnegative, evaluated by linear interpolation
};
struct Line {
  double b;  // f(x) = b (1 - x/a)
};
struct Parabola {
  double b;  // f(x) = b (1 - (x/a)^2)
};
struct PowerSum {
  double exponent;  // f(x) = (a^e - x^e)^(1/e), e > 0
};
}  // namespace graph_fn

using GraphFn = std::variant<graph_fn::Table, graph_fn::Line,
                             graph_fn::Parabola, graph_fn::PowerSum>;

/// Immutable moment-image region in the closed positive orthant.
class Region {
 public:
  static RegionPtr box(std::vector<double> upper);
  static RegionPtr simplex(double level, int dim);
  static RegionPtr orthant_of_body(BodyPtr body);
  static RegionPtr graph2d(double a, GraphFn f);
  static RegionPtr product(RegionPtr left, RegionPtr right);
  static RegionPtr scale(double factor, RegionPtr inner);

  RegionKind kind() const { return kind_; }
  int dim() const { return dim_; }
  const std::vector<double>& upper() const { return upper_; }
  double level() const { return level_; }
  const BodyPtr& body() const { return body_; }
  double a() const { return a_; }
  const GraphFn& fn() const { return fn_; }
  const RegionPtr& left() const { return left_; }
  const RegionPtr& right() const { return right_; }
  double factor() const { return factor_; }
  const RegionPtr& inner() const { return left_; }

 private:
  Region() = default;

  RegionKind kind_ = RegionKind::kBox;
  int dim_ = 0;
  std::vector<double> upper_;  // box
  double level_ = 0.0;         // simplex
  BodyPtr body_;               // orthant
  double a_ = 0.0;             // graph2d
  GraphFn fn_;                 // graph2d
  RegionPtr left_, right_;     // product / scale(inner)
  double factor_ = 0.0;        // scale
};

/// Convexity / concavity of the symmetrized region. Both flags can hold at
/// once (boundary affine, e.g. a simplex); witnesses record sampled points
/// violating whichever property failed.
struct Classification {
  bool convex = false;
  bool concave = false;
  std::vector<std::vector<double>> witnesses;
};

/// Evaluate the boundary profile of a graph region at x (clamped to [0, a]).
double graph_eval(const Region& region, double x);

/// Dual norm of v >= 0: sup over the region of <v, w>.
double support_norm(const Region& region, std::span<const double> v);

/// min over the positive-orthant boundary portion of <v, w>, for v > 0.
/// Defined for concave regions (and the simplex, where it is structural).
double min_inner(const Region& region, std::span<const double> v);

Classification classify(const Region& region);

/// Capacity of the toric domain over a convex region: min over coordinate
/// directions of the dual norm.
CapacityReport capacity_convex_toric(const Region& region);

/// Gromov width of the toric domain over a concave region, computed two
/// independent ways (candidate scan and direct boundary minimization) that
/// must agree.
CapacityReport gromov_width_concave(const Region& region);

struct Interval {
  double lower = 0.0;
  double upper = 0.0;
};

/// [Gromov width, min axis dual norm] bracket for a concave region.
Interval capacity_bounds_concave(const Region& region);

/// Capacity of a product of convex toric domains: the minimum of the factor
/// capacities, cross-checked against the capacity of the assembled product.
CapacityReport product_capacity(std::span<const RegionPtr> factors);

double region_volume(const Region& region);

/// n! vol - capacity^n >= 0 for the convex toric domain over the region.
VerificationRecord viterbo_check(const Region& region);

/// Membership with a 1e-9 relative slack (closed region).
bool region_contains(const Region& region, std::span<const double> w);

/// Coordinate-wise maxima of the region (its bounding box upper corner).
std::vector<double> axis_support(const Region& region);

}  // namespace symcap
