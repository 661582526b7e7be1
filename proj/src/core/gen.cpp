#include "core/gen.hpp"

#include <cmath>
#include <limits>

#include "core/errors.hpp"

namespace symcap::gen {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double random_exponent(num::RngStream& rng) {
  switch (rng.next_int(0, 5)) {
    case 0: return 1.0;
    case 1: return 1.5;
    case 2: return 2.0;
    case 3: return 3.0;
    case 4: return kInf;
    default: return rng.uniform(1.0, 4.0);
  }
}

Matrix random_rotation(num::RngStream& rng, int n) {
  Matrix r = Matrix::identity(n);
  const int sweeps = n * (n - 1);
  for (int s = 0; s < sweeps; ++s) {
    const int i = rng.next_int(0, n - 1);
    int j = rng.next_int(0, n - 2);
    if (j >= i) ++j;
    const double theta = rng.uniform(0.0, 2.0 * num::kPi);
    const double c = std::cos(theta), sn = std::sin(theta);
    Matrix g = Matrix::identity(n);
    g.at(i, i) = c;
    g.at(j, j) = c;
    g.at(i, j) = -sn;
    g.at(j, i) = sn;
    r = g * r;
  }
  return r;
}

}  // namespace

Matrix random_diagonal(num::RngStream& rng, int n) {
  std::vector<double> d(n);
  for (int i = 0; i < n; ++i) {
    d[i] = rng.uniform(0.5, 2.0) * (rng.next_int(0, 1) ? 1.0 : -1.0);
  }
  return Matrix::diagonal(d);
}

Matrix random_well_conditioned(num::RngStream& rng, int n) {
  if (n == 1) return random_diagonal(rng, 1);
  std::vector<double> d(n);
  for (int i = 0; i < n; ++i) d[i] = rng.uniform(0.5, 2.0);
  return random_rotation(rng, n) * Matrix::diagonal(d) *
         random_rotation(rng, n);
}

BodyPtr random_body(num::RngStream& rng, int dim, bool unconditional_only) {
  if (dim == 1) {
    return rng.next_int(0, 1) ? Body::segment(rng.uniform(0.5, 2.0))
                              : Body::lp_ball(1, random_exponent(rng));
  }
  const int choice = rng.next_int(0, 5);
  if (choice == 0) {
    return Body::lp_ball(dim, random_exponent(rng));
  }
  if (choice <= 3) {
    const int k = rng.next_int(1, dim - 1);
    BodyPtr left = random_body(rng, k, unconditional_only);
    BodyPtr right = random_body(rng, dim - k, unconditional_only);
    if (choice == 1) return Body::cartesian(std::move(left), std::move(right));
    return Body::p_product(random_exponent(rng), std::move(left),
                           std::move(right));
  }
  const Matrix map = unconditional_only ? random_diagonal(rng, dim)
                                        : random_well_conditioned(rng, dim);
  return Body::linear_image(map, random_body(rng, dim, unconditional_only));
}

namespace {

RegionPtr random_convex_graph(num::RngStream& rng) {
  const double a = rng.uniform(0.5, 3.0);
  const double b = rng.uniform(0.5, 3.0);
  switch (rng.next_int(0, 2)) {
    case 0: return Region::graph2d(a, graph_fn::Line{b});
    case 1: return Region::graph2d(a, graph_fn::Parabola{b});
    default:
      return Region::graph2d(a, graph_fn::PowerSum{rng.uniform(1.0, 3.0)});
  }
}

RegionPtr random_region_1d(num::RngStream& rng) {
  switch (rng.next_int(0, 2)) {
    case 0: return Region::box({rng.uniform(0.5, 3.0)});
    case 1: return Region::simplex(rng.uniform(0.5, 3.0), 1);
    default:
      return Region::orthant_of_body(Body::segment(rng.uniform(0.5, 3.0)));
  }
}

}  // namespace

RegionPtr random_convex_region(num::RngStream& rng, int dim) {
  if (dim == 1) return random_region_1d(rng);
  if (dim != 2 && dim != 3) {
    throw Error(ErrorCode::kDimension,
                "random_convex_region: dimension must be 1, 2, or 3");
  }
  const int choice = rng.next_int(0, 5);
  switch (choice) {
    case 0:
    case 1: {
      std::vector<double> upper(dim);
      for (double& u : upper) u = rng.uniform(0.5, 3.0);
      if (choice == 0) return Region::box(std::move(upper));
      return Region::simplex(rng.uniform(0.5, 3.0), dim);
    }
    case 2:
      return Region::orthant_of_body(random_body(rng, dim, true));
    case 3:
      if (dim == 2) return random_convex_graph(rng);
      return Region::product(random_convex_graph(rng), random_region_1d(rng));
    case 4: {
      const int k = dim == 2 ? 1 : rng.next_int(1, 2);
      return Region::product(
          k == 1 ? random_region_1d(rng) : random_convex_region(rng, 2),
          dim - k == 1 ? random_region_1d(rng) : random_convex_region(rng, 2));
    }
    default:
      return Region::scale(rng.uniform(0.5, 4.0),
                           random_convex_region(rng, dim));
  }
}

RegionPtr random_concave_region(num::RngStream& rng) {
  switch (rng.next_int(0, 3)) {
    case 0: {
      const double a = rng.uniform(0.5, 3.0);
      return Region::graph2d(a, graph_fn::Line{rng.uniform(0.5, 3.0)});
    }
    case 1: {
      const double a = rng.uniform(0.5, 3.0);
      return Region::graph2d(a, graph_fn::PowerSum{rng.uniform(0.35, 1.0)});
    }
    case 2:
      return Region::simplex(rng.uniform(0.5, 3.0), rng.next_int(1, 3));
    default:
      return Region::scale(rng.uniform(0.5, 4.0), random_concave_region(rng));
  }
}

std::vector<double> random_point(num::RngStream& rng, int dim, double scale) {
  std::vector<double> x(dim);
  for (double& xi : x) xi = rng.uniform(-scale, scale);
  return x;
}

}  // namespace symcap::gen
