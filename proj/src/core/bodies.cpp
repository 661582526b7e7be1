#include "core/bodies.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "core/errors.hpp"
#include "core/numerics.hpp"

namespace symcap {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kMembershipSlack = 1e-9;

bool is_inf(double p) { return std::isinf(p); }

void check_exponent(double p, const char* what) {
  if (std::isnan(p) || p < 1.0) {
    throw Error(ErrorCode::kDomain,
                std::string(what) + ": exponent must lie in [1, inf], got " +
                    std::to_string(p));
  }
}

void check_dim(const Body& body, std::span<const double> x, const char* what) {
  if (static_cast<int>(x.size()) != body.dim()) {
    throw Error(ErrorCode::kDimension,
                std::string(what) + ": vector has dimension " +
                    std::to_string(x.size()) + ", body has dimension " +
                    std::to_string(body.dim()));
  }
}

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// l_p combination of two nonnegative values.
double p_combine(double u, double v, double p) {
  if (is_inf(p)) return std::max(u, v);
  if (p == 1.0) return u + v;
  const double m = std::max(u, v);
  if (m == 0.0) return 0.0;
  const double s = std::pow(u / m, p) + std::pow(v / m, p);
  return m * std::pow(s, 1.0 / p);
}

double lp_norm(std::span<const double> x, double p) {
  if (is_inf(p)) {
    double m = 0.0;
    for (double xi : x) m = std::max(m, std::abs(xi));
    return m;
  }
  if (p == 1.0) {
    double s = 0.0;
    for (double xi : x) s += std::abs(xi);
    return s;
  }
  double m = 0.0;
  for (double xi : x) m = std::max(m, std::abs(xi));
  if (m == 0.0) return 0.0;
  double s = 0.0;
  if (p == 2.0) {
    for (double xi : x) {
      const double t = xi / m;
      s += t * t;
    }
    return m * std::sqrt(s);
  }
  for (double xi : x) s += std::pow(std::abs(xi) / m, p);
  return m * std::pow(s, 1.0 / p);
}

// vol(B^n_p) = (2 Gamma(1 + 1/p))^n / Gamma(1 + n/p), with exact p = 1, inf
// endpoint limits.
double lp_ball_volume(int n, double p) {
  if (is_inf(p)) return std::pow(2.0, n);
  if (p == 1.0) return std::pow(2.0, n) / factorial(n);
  const double g1 = num::gamma_fn(1.0 + 1.0 / p);
  return std::pow(2.0 * g1, n) / num::gamma_fn(1.0 + n / p);
}

// vol(K x_p M) = vol(K) vol(M) * Gamma(1+n/p) Gamma(1+m/p) / Gamma(1+(n+m)/p).
double p_product_factor(int n, int m, double p) {
  if (is_inf(p)) return 1.0;
  if (p == 1.0) return factorial(n) * factorial(m) / factorial(n + m);
  return num::gamma_fn(1.0 + n / p) * num::gamma_fn(1.0 + m / p) /
         num::gamma_fn(1.0 + (n + m) / p);
}

}  // namespace

BodyPtr Body::segment(double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw Error(ErrorCode::kDomain,
                "segment: radius must be positive and finite");
  }
  auto b = std::shared_ptr<Body>(new Body());
  b->kind_ = BodyKind::kSegment;
  b->dim_ = 1;
  b->radius_ = radius;
  return b;
}

BodyPtr Body::lp_ball(int dim, double p) {
  if (dim < 1) {
    throw Error(ErrorCode::kDimension, "lp_ball: dimension must be >= 1");
  }
  check_exponent(p, "lp_ball");
  auto b = std::shared_ptr<Body>(new Body());
  b->kind_ = BodyKind::kLpBall;
  b->dim_ = dim;
  b->p_ = p;
  return b;
}

BodyPtr Body::cartesian(BodyPtr left, BodyPtr right) {
  if (!left || !right) {
    throw Error(ErrorCode::kInvalidArgument, "cartesian: null operand");
  }
  auto b = std::shared_ptr<Body>(new Body());
  b->kind_ = BodyKind::kCartesian;
  b->dim_ = left->dim() + right->dim();
  b->left_ = std::move(left);
  b->right_ = std::move(right);
  return b;
}

BodyPtr Body::p_product(double p, BodyPtr left, BodyPtr right) {
  if (!left || !right) {
    throw Error(ErrorCode::kInvalidArgument, "p_product: null operand");
  }
  check_exponent(p, "p_product");
  auto b = std::shared_ptr<Body>(new Body());
  b->kind_ = BodyKind::kPProduct;
  b->dim_ = left->dim() + right->dim();
  b->p_ = p;
  b->left_ = std::move(left);
  b->right_ = std::move(right);
  return b;
}

BodyPtr Body::linear_image(const Matrix& map, BodyPtr child) {
  if (!child) {
    throw Error(ErrorCode::kInvalidArgument, "linear_image: null operand");
  }
  if (map.size() != child->dim()) {
    throw Error(ErrorCode::kDimension,
                "linear_image: matrix size " + std::to_string(map.size()) +
                    " does not match body dimension " +
                    std::to_string(child->dim()));
  }
  auto b = std::shared_ptr<Body>(new Body());
  b->kind_ = BodyKind::kLinearImage;
  b->dim_ = child->dim();
  b->map_ = map;
  b->inverse_map_ = map.inverse();  // throws kDomain if singular
  b->left_ = std::move(child);
  return b;
}

double dual_exponent(double p) {
  check_exponent(p, "dual_exponent");
  if (p == 1.0) return kInf;
  if (is_inf(p)) return 1.0;
  return p / (p - 1.0);
}

double gauge(const Body& body, std::span<const double> x) {
  check_dim(body, x, "gauge");
  switch (body.kind()) {
    case BodyKind::kSegment:
      return std::abs(x[0]) / body.radius();
    case BodyKind::kLpBall:
      return lp_norm(x, body.p());
    case BodyKind::kCartesian:
    case BodyKind::kPProduct: {
      const int k = body.left()->dim();
      const double gl = gauge(*body.left(), x.subspan(0, k));
      const double gr = gauge(*body.right(), x.subspan(k));
      if (body.kind() == BodyKind::kCartesian) return std::max(gl, gr);
      return p_combine(gl, gr, body.p());
    }
    case BodyKind::kLinearImage: {
      const std::vector<double> y = body.inverse_map().apply(x);
      return gauge(*body.child(), y);
    }
  }
  throw Error(ErrorCode::kInternal, "gauge: unknown body kind");
}

bool contains(const Body& body, std::span<const double> x) {
  return gauge(body, x) <= 1.0 + kMembershipSlack;
}

BodyPtr polar(const BodyPtr& body) {
  if (!body) {
    throw Error(ErrorCode::kInvalidArgument, "polar: null body");
  }
  switch (body->kind()) {
    case BodyKind::kSegment:
      return Body::segment(1.0 / body->radius());
    case BodyKind::kLpBall:
      return Body::lp_ball(body->dim(), dual_exponent(body->p()));
    case BodyKind::kCartesian:
      return Body::p_product(1.0, polar(body->left()), polar(body->right()));
    case BodyKind::kPProduct:
      return Body::p_product(dual_exponent(body->p()), polar(body->left()),
                             polar(body->right()));
    case BodyKind::kLinearImage:
      return Body::linear_image(body->inverse_map().transpose(),
                                polar(body->child()));
  }
  throw Error(ErrorCode::kInternal, "polar: unknown body kind");
}

double support(const Body& body, std::span<const double> v) {
  check_dim(body, v, "support");
  switch (body.kind()) {
    case BodyKind::kSegment:
      return body.radius() * std::abs(v[0]);
    case BodyKind::kLpBall:
      return lp_norm(v, dual_exponent(body.p()));
    case BodyKind::kCartesian:
    case BodyKind::kPProduct: {
      const int k = body.left()->dim();
      const double hl = support(*body.left(), v.subspan(0, k));
      const double hr = support(*body.right(), v.subspan(k));
      if (body.kind() == BodyKind::kCartesian) return hl + hr;
      return p_combine(hl, hr, dual_exponent(body.p()));
    }
    case BodyKind::kLinearImage: {
      // h_{Y K}(v) = h_K(Y^T v).
      const std::vector<double> w = body.map().transpose().apply(v);
      return support(*body.child(), w);
    }
  }
  throw Error(ErrorCode::kInternal, "support: unknown body kind");
}

double volume(const Body& body) {
  switch (body.kind()) {
    case BodyKind::kSegment:
      return 2.0 * body.radius();
    case BodyKind::kLpBall:
      return lp_ball_volume(body.dim(), body.p());
    case BodyKind::kCartesian:
      return volume(*body.left()) * volume(*body.right());
    case BodyKind::kPProduct:
      return volume(*body.left()) * volume(*body.right()) *
             p_product_factor(body.left()->dim(), body.right()->dim(),
                              body.p());
    case BodyKind::kLinearImage:
      return std::abs(body.map().determinant()) * volume(*body.child());
  }
  throw Error(ErrorCode::kInternal, "volume: unknown body kind");
}

double mahler(const Body& body) {
  // Share the tree with polar() through a non-owning alias.
  BodyPtr self(&body, [](const Body*) {});
  return volume(body) * volume(*polar(self));
}

bool is_coordinate_unconditional(const Body& body) {
  switch (body.kind()) {
    case BodyKind::kSegment:
    case BodyKind::kLpBall:
      return true;
    case BodyKind::kCartesian:
    case BodyKind::kPProduct:
      return is_coordinate_unconditional(*body.left()) &&
             is_coordinate_unconditional(*body.right());
    case BodyKind::kLinearImage:
      return body.map().is_diagonal() &&
             is_coordinate_unconditional(*body.child());
  }
  throw Error(ErrorCode::kInternal,
              "is_coordinate_unconditional: unknown body kind");
}

BodyPtr hanner(std::span<const double> exponents) {
  BodyPtr b = Body::segment(1.0);
  for (double p : exponents) {
    if (p != 1.0 && !is_inf(p)) {
      throw Error(ErrorCode::kDomain,
                  "hanner: exponents must each be 1 or inf");
    }
    if (is_inf(p)) {
      b = Body::cartesian(b, Body::segment(1.0));
    } else {
      b = Body::p_product(1.0, b, Body::segment(1.0));
    }
  }
  return b;
}

}  // namespace symcap
