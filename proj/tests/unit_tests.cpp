#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include <json.hpp>

#include "core/bodies.hpp"
#include "core/errors.hpp"
#include "core/gen.hpp"
#include "core/lagrangian.hpp"
#include "core/linalg.hpp"
#include "core/mahler.hpp"
#include "core/numerics.hpp"
#include "core/oracles.hpp"
#include "core/serialize.hpp"
#include "core/toric.hpp"
#include "core/verify.hpp"

using namespace symcap;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <typename Fn>
std::optional<ErrorCode> thrown_code(Fn&& fn) {
  try {
    fn();
  } catch (const Error& err) {
    return err.code();
  }
  return std::nullopt;
}

double rel(double a, double b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

}  // namespace

// ---------------------------------------------------------------------------
TEST_SUITE("numerics") {

TEST_CASE("gamma known values") {
  CHECK(rel(num::gamma_fn(0.5), 1.7724538509055160273) < 1e-14);
  CHECK(rel(num::gamma_fn(1.0), 1.0) < 1e-14);
  CHECK(rel(num::gamma_fn(5.0), 24.0) < 1e-14);
  CHECK(rel(num::gamma_fn(4.0 / 3.0), 0.89297951156924921122) < 1e-13);
  CHECK(std::isfinite(num::gamma_fn(170.0)));
}

TEST_CASE("gamma domain") {
  CHECK(thrown_code([] { num::gamma_fn(0.0); }) == ErrorCode::kDomain);
  CHECK(thrown_code([] { num::gamma_fn(-2.5); }) == ErrorCode::kDomain);
}

TEST_CASE("log_gamma matches gamma") {
  for (double x : {0.5, 1.0, 3.25, 10.0, 55.5}) {
    CHECK(rel(std::exp(num::log_gamma(x)), num::gamma_fn(x)) < 1e-12);
  }
}

TEST_CASE("digamma known values") {
  CHECK(std::abs(num::digamma(1.0) + num::kEulerGamma) < 1e-13);
  CHECK(std::abs(num::digamma(0.5) - (-1.9635100260214234794)) < 1e-13);
  CHECK(std::abs(num::digamma(1.5) - 0.036489973978576520559) < 1e-13);
  // psi(x+1) = psi(x) + 1/x
  for (double x : {0.7, 2.3, 9.9}) {
    CHECK(std::abs(num::digamma(x + 1.0) - num::digamma(x) - 1.0 / x) < 1e-13);
  }
}

TEST_CASE("integrate polynomials and orientation") {
  const double third = num::integrate([](double x) { return x * x; }, 0.0, 1.0);
  CHECK(std::abs(third - 1.0 / 3.0) < 1e-12);
  const double reversed =
      num::integrate([](double x) { return x * x; }, 1.0, 0.0);
  CHECK(std::abs(reversed + 1.0 / 3.0) < 1e-12);
  CHECK(num::integrate([](double) { return 7.0; }, 2.0, 2.0) == 0.0);
}

TEST_CASE("integrate endpoint singularity") {
  const double value = num::integrate(
      [](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, {1e-9, 20000});
  CHECK(std::abs(value - 2.0) < 1e-8);
}

TEST_CASE("integrate failure modes") {
  CHECK(thrown_code([] {
          num::integrate([](double x) { return std::sin(1.0 / x); }, 0.0, 1.0,
                         {1e-15, 8});
        }) == ErrorCode::kNoConvergence);
  CHECK(thrown_code([] {
          num::integrate(
              [](double x) {
                return x < 0.5 ? std::numeric_limits<double>::quiet_NaN() : 1.0;
              },
              0.0, 1.0);
        }) == ErrorCode::kDomain);
  CHECK(thrown_code([] {
          num::integrate([](double) { return 1.0; }, 0.0, kInf);
        }) == ErrorCode::kDomain);
}

TEST_CASE("rng determinism and substreams") {
  num::RngStream a(123, 5);
  num::RngStream b(123, 5);
  for (int i = 0; i < 200; ++i) CHECK(a.next_u64() == b.next_u64());

  num::RngStream base(123, 5);
  num::RngStream sub0 = base.substream(0);
  num::RngStream sub1 = base.substream(1);
  bool differ = false;
  for (int i = 0; i < 16; ++i) {
    differ = differ || (sub0.next_u64() != sub1.next_u64());
  }
  CHECK(differ);
}

TEST_CASE("rng ranges") {
  num::RngStream rng(99, 0);
  int lo_seen = 100, hi_seen = -100;
  for (int i = 0; i < 2000; ++i) {
    const double u = rng.next_double();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    const double x = rng.uniform(-2.0, 3.0);
    CHECK(x >= -2.0);
    CHECK(x <= 3.0);
    const int k = rng.next_int(0, 3);
    lo_seen = std::min(lo_seen, k);
    hi_seen = std::max(hi_seen, k);
  }
  CHECK(lo_seen == 0);
  CHECK(hi_seen == 3);
}

}  // TEST_SUITE numerics

// ---------------------------------------------------------------------------
TEST_SUITE("linalg") {

TEST_CASE("determinant and inverse") {
  Matrix m(2);
  m.at(0, 0) = 2.0;
  m.at(0, 1) = 1.0;
  m.at(1, 0) = 1.0;
  m.at(1, 1) = 3.0;
  CHECK(std::abs(m.determinant() - 5.0) < 1e-14);

  const Matrix inv = m.inverse();
  const Matrix prod = m * inv;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      CHECK(std::abs(prod.at(i, j) - (i == j ? 1.0 : 0.0)) < 1e-13);
    }
  }

  Matrix singular(2);
  singular.at(0, 0) = 1.0;
  singular.at(0, 1) = 2.0;
  singular.at(1, 0) = 2.0;
  singular.at(1, 1) = 4.0;
  CHECK(std::abs(singular.determinant()) < 1e-14);
  CHECK(thrown_code([&] { singular.inverse(); }) == ErrorCode::kDomain);
}

TEST_CASE("apply and diagonal detection") {
  Matrix d = Matrix::diagonal({2.0, -3.0});
  CHECK(d.is_diagonal());
  std::vector<double> x{1.0, 1.0};
  const std::vector<double> y = d.apply(x);
  CHECK(y[0] == 2.0);
  CHECK(y[1] == -3.0);

  Matrix r(2);
  r.at(0, 0) = 0.0;
  r.at(0, 1) = 1.0;
  r.at(1, 0) = -1.0;
  r.at(1, 1) = 0.0;
  CHECK(!r.is_diagonal());
  const Matrix rt = r.transpose();
  CHECK(rt.at(0, 1) == -1.0);
}

}  // TEST_SUITE linalg

// ---------------------------------------------------------------------------
TEST_SUITE("bodies") {

TEST_CASE("gauge of the standard balls") {
  const BodyPtr b1 = Body::lp_ball(2, 1.0);
  const BodyPtr b2 = Body::lp_ball(2, 2.0);
  const BodyPtr binf = Body::lp_ball(2, kInf);
  const std::vector<double> x{0.5, 0.5};
  CHECK(rel(gauge(*b1, x), 1.0) < 1e-14);
  CHECK(rel(gauge(*b2, x), std::sqrt(0.5)) < 1e-14);
  CHECK(rel(gauge(*binf, x), 0.5) < 1e-14);

  const BodyPtr seg = Body::segment(2.0);
  const std::vector<double> t{-3.0};
  CHECK(rel(gauge(*seg, t), 1.5) < 1e-14);
}

TEST_CASE("construction errors") {
  CHECK(thrown_code([] { Body::lp_ball(0, 2.0); }) == ErrorCode::kDimension);
  CHECK(thrown_code([] { Body::lp_ball(2, 0.5); }) == ErrorCode::kDomain);
  CHECK(thrown_code([] { Body::segment(0.0); }) == ErrorCode::kDomain);
  CHECK(thrown_code([] {
          const BodyPtr b = Body::lp_ball(2, 2.0);
          const std::vector<double> x{1.0, 2.0, 3.0};
          gauge(*b, x);
        }) == ErrorCode::kDimension);
  CHECK(thrown_code([] {
          Matrix m(2);
          m.at(0, 0) = 1.0;
          m.at(0, 1) = 1.0;
          m.at(1, 0) = 1.0;
          m.at(1, 1) = 1.0;  // singular
          Body::linear_image(m, Body::lp_ball(2, 2.0));
        }) == ErrorCode::kDomain);
}

TEST_CASE("dual exponent") {
  CHECK(dual_exponent(1.0) == kInf);
  CHECK(dual_exponent(kInf) == 1.0);
  CHECK(dual_exponent(2.0) == 2.0);
  CHECK(rel(dual_exponent(1.5), 3.0) < 1e-15);
  CHECK(rel(dual_exponent(4.0), 4.0 / 3.0) < 1e-15);
}

TEST_CASE("volume closed forms") {
  CHECK(rel(volume(*Body::lp_ball(2, 2.0)), num::kPi) < 1e-13);
  CHECK(volume(*Body::lp_ball(3, 1.0)) == 8.0 / 6.0);
  CHECK(volume(*Body::lp_ball(3, kInf)) == 8.0);
  CHECK(rel(volume(*Body::lp_ball(4, 2.0)), 4.9348022005446793094) < 1e-13);
  CHECK(volume(*Body::segment(2.5)) == 5.0);
  // scaling by a diagonal map multiplies volume by |det|
  const BodyPtr scaled = Body::linear_image(Matrix::diagonal({1.5, 0.75}),
                                            Body::lp_ball(2, 2.0));
  CHECK(rel(volume(*scaled), 1.125 * num::kPi) < 1e-13);
}

TEST_CASE("support functions") {
  const std::vector<double> v{3.0, -4.0};
  CHECK(rel(support(*Body::lp_ball(2, 1.0), v), 4.0) < 1e-14);
  CHECK(rel(support(*Body::lp_ball(2, 2.0), v), 5.0) < 1e-14);
  CHECK(rel(support(*Body::lp_ball(2, kInf), v), 7.0) < 1e-14);
}

TEST_CASE("contains honors the boundary slack") {
  const BodyPtr disk = Body::lp_ball(2, 2.0);
  const std::vector<double> boundary{1.0, 0.0};
  const std::vector<double> outside{1.001, 0.0};
  CHECK(contains(*disk, boundary));
  CHECK(!contains(*disk, outside));
}

TEST_CASE("polar pairs and involution") {
  const BodyPtr b1 = Body::lp_ball(2, 1.0);
  const BodyPtr binf_direct = Body::lp_ball(2, kInf);
  const BodyPtr binf_polar = polar(b1);
  num::RngStream rng(7, 0);
  for (int i = 0; i < 50; ++i) {
    const std::vector<double> x = gen::random_point(rng, 2, 2.0);
    CHECK(rel(gauge(*binf_polar, x), gauge(*binf_direct, x)) < 1e-14);
  }

  const BodyPtr tree = Body::p_product(
      1.5, Body::lp_ball(2, 2.0),
      Body::linear_image(gen::random_well_conditioned(rng, 2),
                         Body::lp_ball(2, 3.0)));
  const BodyPtr twice = polar(polar(tree));
  for (int i = 0; i < 50; ++i) {
    const std::vector<double> x = gen::random_point(rng, 4, 2.0);
    CHECK(rel(gauge(*twice, x), gauge(*tree, x)) < 1e-11);
  }
}

TEST_CASE("mahler volumes") {
  CHECK(rel(mahler(*Body::lp_ball(2, kInf)), 8.0) < 1e-14);
  CHECK(rel(mahler(*Body::lp_ball(2, 2.0)), 9.8696044010893586188) < 1e-13);
  CHECK(rel(mahler(*Body::lp_ball(2, 1.5)), 9.6735966092491618698) < 1e-12);
}

TEST_CASE("hanner chains") {
  const std::vector<double> spec{1.0, kInf};
  const BodyPtr h = hanner(spec);
  CHECK(h->dim() == 3);
  CHECK(rel(volume(*h), 4.0) < 1e-13);
  CHECK(rel(6.0 * mahler(*h), 64.0) < 1e-12);
  const std::vector<double> bad{1.0, 2.0};
  CHECK(thrown_code([&] { hanner(bad); }) == ErrorCode::kDomain);
}

TEST_CASE("unconditionality detection") {
  const BodyPtr diag = Body::linear_image(Matrix::diagonal({2.0, 0.5}),
                                          Body::lp_ball(2, 1.0));
  CHECK(is_coordinate_unconditional(*diag));
  Matrix rot(2);
  rot.at(0, 0) = std::cos(0.5);
  rot.at(0, 1) = -std::sin(0.5);
  rot.at(1, 0) = std::sin(0.5);
  rot.at(1, 1) = std::cos(0.5);
  const BodyPtr rotated = Body::linear_image(rot, Body::lp_ball(2, 1.0));
  CHECK(!is_coordinate_unconditional(*rotated));
}

}  // TEST_SUITE bodies

// ---------------------------------------------------------------------------
TEST_SUITE("toric") {

TEST_CASE("capacity of elementary regions") {
  CHECK(capacity_convex_toric(*Region::box({3.0, 1.5, 2.0})).value == 1.5);
  CHECK(capacity_convex_toric(*Region::simplex(num::kPi, 4)).value ==
        num::kPi);
  const RegionPtr quarter = Region::orthant_of_body(Body::lp_ball(2, 2.0));
  CHECK(rel(capacity_convex_toric(*quarter).value, 1.0) < 1e-12);
  const RegionPtr tri = Region::graph2d(3.0, graph_fn::Line{2.0});
  CHECK(rel(capacity_convex_toric(*tri).value, 2.0) < 1e-12);
  const RegionPtr scaled = Region::scale(2.5, Region::simplex(1.0, 2));
  CHECK(rel(capacity_convex_toric(*scaled).value, 2.5) < 1e-12);
}

TEST_CASE("capacity report carries provenance and candidates") {
  const CapacityReport report = capacity_convex_toric(*Region::simplex(2.0, 3));
  CHECK(report.provenance == "Theorem 1.5");
  CHECK(report.candidates.size() == 3);
}

TEST_CASE("classification") {
  const Classification simplex_cls = classify(*Region::simplex(1.0, 2));
  CHECK(simplex_cls.convex);
  CHECK(simplex_cls.concave);

  const Classification box_cls = classify(*Region::box({1.0, 2.0}));
  CHECK(box_cls.convex);
  CHECK(!box_cls.concave);

  const Classification concave_cls =
      classify(*Region::graph2d(2.0, graph_fn::PowerSum{0.5}));
  CHECK(!concave_cls.convex);
  CHECK(concave_cls.concave);

  const Classification parabola_cls =
      classify(*Region::graph2d(2.0, graph_fn::Parabola{1.0}));
  CHECK(parabola_cls.convex);
  CHECK(!parabola_cls.concave);

  const Classification line_cls =
      classify(*Region::graph2d(3.0, graph_fn::Line{2.0}));
  CHECK(line_cls.convex);
  CHECK(line_cls.concave);
}

TEST_CASE("route preconditions") {
  CHECK(thrown_code([] {
          capacity_convex_toric(*Region::graph2d(2.0, graph_fn::PowerSum{0.5}));
        }) == ErrorCode::kPrecondition);
  CHECK(thrown_code([] {
          gromov_width_concave(*Region::box({1.0, 2.0}));
        }) == ErrorCode::kPrecondition);
}

TEST_CASE("min_inner on the simplex") {
  const RegionPtr simplex = Region::simplex(2.0, 3);
  const std::vector<double> v{1.0, 3.0, 2.0};
  CHECK(rel(min_inner(*simplex, v), 2.0) < 1e-14);
}

TEST_CASE("gromov width values") {
  CHECK(rel(gromov_width_concave(*Region::simplex(num::kPi, 2)).value,
            num::kPi) < 1e-12);
  // For f(x) = (sqrt(2) - sqrt(x))^2 on [0,2], min of x + f(x) is exactly 1.
  const RegionPtr cusp = Region::graph2d(2.0, graph_fn::PowerSum{0.5});
  const CapacityReport width = gromov_width_concave(*cusp);
  CHECK(rel(width.value, 1.0) < 1e-9);
  CHECK(width.provenance == "Remark 2.1");

  const Interval bounds = capacity_bounds_concave(*cusp);
  CHECK(rel(bounds.lower, 1.0) < 1e-9);
  CHECK(rel(bounds.upper, 2.0) < 1e-12);
}

TEST_CASE("product capacity") {
  const std::vector<RegionPtr> factors{Region::simplex(1.0, 1),
                                       Region::box({2.0, 3.0})};
  const CapacityReport report = product_capacity(factors);
  CHECK(report.value == 1.0);
  CHECK(report.provenance == "Corollary 1.6");
  CHECK(!report.checks.empty());
  CHECK(report.checks.front().passed);
}

TEST_CASE("region volumes") {
  CHECK(region_volume(*Region::box({1.0, 2.0, 3.0})) == 6.0);
  CHECK(rel(region_volume(*Region::simplex(num::kPi, 2)),
            num::kPi * num::kPi / 2.0) < 1e-14);
  CHECK(rel(region_volume(*Region::graph2d(3.0, graph_fn::Line{2.0})), 3.0) <
        1e-14);
  CHECK(rel(region_volume(*Region::graph2d(3.0, graph_fn::Parabola{1.0})),
            2.0) < 1e-14);
  // quarter of the l_{1/2} disk of radius 2: 4 Gamma(3)^2 / Gamma(5) = 2/3
  CHECK(rel(region_volume(*Region::graph2d(2.0, graph_fn::PowerSum{0.5})),
            2.0 / 3.0) < 1e-13);
  CHECK(rel(region_volume(*Region::orthant_of_body(Body::lp_ball(2, 2.0))),
            num::kPi / 4.0) < 1e-13);
}

TEST_CASE("viterbo slack") {
  const VerificationRecord simplex_case = viterbo_check(*Region::simplex(1.3, 3));
  CHECK(simplex_case.passed);
  CHECK(std::abs(simplex_case.slack) < 1e-12);

  const VerificationRecord box_case = viterbo_check(*Region::box({1.0, 2.0}));
  CHECK(box_case.passed);
  CHECK(rel(box_case.slack, 3.0) < 1e-12);
}

TEST_CASE("region membership and axis support") {
  const RegionPtr simplex = Region::simplex(1.0, 2);
  const std::vector<double> inside{0.4, 0.4};
  const std::vector<double> boundary{0.5, 0.5};
  const std::vector<double> outside{0.7, 0.5};
  const std::vector<double> negative{-0.1, 0.2};
  CHECK(region_contains(*simplex, inside));
  CHECK(region_contains(*simplex, boundary));
  CHECK(!region_contains(*simplex, outside));
  CHECK(!region_contains(*simplex, negative));

  const std::vector<double> reach = axis_support(*Region::box({2.0, 5.0}));
  CHECK(reach == std::vector<double>{2.0, 5.0});
}

TEST_CASE("graph table regions") {
  graph_fn::Table t;
  t.x = {0.0, 1.0, 2.0};
  t.y = {2.0, 1.0, 0.0};
  const RegionPtr region = Region::graph2d(2.0, t);
  CHECK(rel(region_volume(*region), 2.0) < 1e-14);
  CHECK(rel(capacity_convex_toric(*region).value, 2.0) < 1e-12);

  graph_fn::Table rising;
  rising.x = {0.0, 1.0, 2.0};
  rising.y = {1.0, 2.0, 0.5};
  CHECK(thrown_code([&] { Region::graph2d(2.0, rising); }) ==
        ErrorCode::kDomain);
}

}  // TEST_SUITE toric

// ---------------------------------------------------------------------------
TEST_SUITE("oracles") {

TEST_CASE("mc volume on the cube is exact") {
  const BodyPtr cube = Body::lp_ball(2, kInf);
  const auto member = [&cube](std::span<const double> x) {
    return contains(*cube, x);
  };
  oracle::BBox box{{-1.0, -1.0}, {1.0, 1.0}};
  const MCEstimate est =
      oracle::mc_volume(member, box, 5000, num::RngStream(42, 0), 1);
  CHECK(est.mean == 4.0);
  CHECK(est.std_error == 0.0);
  CHECK(est.samples == 5000);
}

TEST_CASE("mc volume thread split does not change the estimate") {
  const BodyPtr disk = Body::lp_ball(2, 2.0);
  const auto member = [&disk](std::span<const double> x) {
    return contains(*disk, x);
  };
  oracle::BBox box{{-1.0, -1.0}, {1.0, 1.0}};
  const MCEstimate a =
      oracle::mc_volume(member, box, 30000, num::RngStream(42, 9), 1);
  const MCEstimate b =
      oracle::mc_volume(member, box, 30000, num::RngStream(42, 9), 4);
  CHECK(a.mean == b.mean);
  CHECK(std::abs(a.mean - num::kPi) < 3.0 * a.std_error + 1e-12);
}

TEST_CASE("grid support hits on-grid extrema exactly") {
  const BodyPtr cube = Body::lp_ball(2, kInf);
  const auto member = [&cube](std::span<const double> x) {
    return contains(*cube, x);
  };
  oracle::BBox box{{-1.0, -1.0}, {1.0, 1.0}};
  const std::vector<double> v{1.0, 1.0};
  CHECK(oracle::grid_support(member, box, v, 10) == 2.0);
}

TEST_CASE("grid axis maxima match per-axis grid support") {
  const BodyPtr body = Body::lp_ball(2, 1.5);
  const auto member = [&body](std::span<const double> x) {
    return contains(*body, x);
  };
  oracle::BBox box{{-1.0, -1.0}, {1.0, 1.0}};
  const std::vector<double> maxima = oracle::grid_axis_maxima(member, box, 50);
  for (int axis = 0; axis < 2; ++axis) {
    std::vector<double> e(2, 0.0);
    e[axis] = 1.0;
    CHECK(maxima[axis] == oracle::grid_support(member, box, e, 50));
  }
}

TEST_CASE("grid refinement is monotone on nested grids") {
  const BodyPtr body = Body::linear_image(Matrix::diagonal({0.8, 1.7}),
                                          Body::lp_ball(2, 2.0));
  const auto member = [&body](std::span<const double> x) {
    return contains(*body, x);
  };
  oracle::BBox box{{-1.0, -2.0}, {1.0, 2.0}};
  const std::vector<double> v{0.37, 0.61};
  const double coarse = oracle::grid_support(member, box, v, 40);
  const double fine = oracle::grid_support(member, box, v, 80);
  CHECK(fine >= coarse);
  CHECK(fine <= support(*body, v) + 1e-12);
}

TEST_CASE("shoelace areas") {
  const std::vector<std::array<double, 2>> square{
      {0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}};
  CHECK(oracle::shoelace_area(square) == 1.0);
  const std::vector<std::array<double, 2>> triangle{
      {0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}};
  CHECK(oracle::shoelace_area(triangle) == 0.5);
  const std::vector<std::array<double, 2>> clockwise{
      {0.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}, {1.0, 0.0}};
  CHECK(oracle::shoelace_area(clockwise) == 1.0);
  const std::vector<std::array<double, 2>> bowtie{
      {0.0, 0.0}, {1.0, 1.0}, {1.0, 0.0}, {0.0, 1.0}};
  CHECK(thrown_code([&] { oracle::shoelace_area(bowtie); }) ==
        ErrorCode::kDomain);
}

TEST_CASE("finite differences") {
  const double quad = oracle::finite_difference(
      [](double x) { return x * x; }, 3.0, 1e-5);
  CHECK(std::abs(quad - 6.0) < 1e-9);
  const double trig = oracle::finite_difference(
      [](double x) { return std::sin(x); }, 0.5, 1e-6);
  CHECK(std::abs(trig - std::cos(0.5)) < 1e-9);
}

}  // TEST_SUITE oracles

// ---------------------------------------------------------------------------
TEST_SUITE("mahler") {

TEST_CASE("closed-form values") {
  CHECK(mahler_lp(2, 1.0) == 8.0);
  CHECK(mahler_lp(2, kInf) == 8.0);
  CHECK(rel(mahler_lp(3, 1.0), 64.0 / 6.0) < 1e-15);
  CHECK(rel(mahler_lp(2, 2.0), 9.8696044010893586188) < 1e-13);
  CHECK(rel(mahler_lp(2, 1.5), 9.6735966092491618698) < 1e-13);
  CHECK(rel(mahler_lp(3, 1.5), 16.763710800594106913) < 1e-13);
}

TEST_CASE("phi identities") {
  CHECK(phi(2, 2.0) == 0.0);
  CHECK(phi(5, 2.0) == 0.0);
  // n = 1 cancels algebraically; floating point leaves at most an ulp or two.
  CHECK(std::abs(phi(1, 1.0)) < 1e-15);
  CHECK(std::abs(phi(1, 1.37)) < 1e-15);
  CHECK(std::abs(phi(3, 1.0) - 0.83333333333333333333) < 1e-13);
  CHECK(std::abs(phi(2, 1.5) - 0.12240127153156429881) < 1e-13);
  CHECK(thrown_code([] { phi(2, 2.5); }) == ErrorCode::kDomain);
  CHECK(thrown_code([] { mahler_lp(0, 1.5); }) == ErrorCode::kDimension);
}

TEST_CASE("derivative closed form") {
  CHECK(std::abs(mahler_derivative(2, 1.5) - 1.0524982446715789930) < 1e-12);
  CHECK(mahler_derivative(2, 2.0) == 0.0);
  CHECK(std::abs(mahler_derivative(2, 1.0) - 8.0) < 1e-12);
  const double fd = oracle::finite_difference(
      [](double p) { return mahler_lp(4, p); }, 1.4, 1e-4);
  CHECK(rel(mahler_derivative(4, 1.4), fd) < 1e-6);
}

TEST_CASE("phi integral representation") {
  const VerificationRecord record = phi_integral_check(2, 1.5);
  CHECK(record.passed);
  CHECK(std::abs(record.quantities.at("digamma_form") -
                 record.quantities.at("integral")) < 1e-7);
}

TEST_CASE("integrand factors") {
  CHECK(rel(phi_integrand_f(2, 0.5), 1.2071067811865475244) < 1e-13);
  const double near_one = phi_integrand_f(2, 1.0 - 1e-9);
  CHECK(near_one >= 1.0);
  CHECK(near_one < 1.0 + 1e-8);
  CHECK(phi_integrand_g(0.5, 0.25) == -0.125);
  CHECK(phi_integrand_g(1.0, 0.7) == 0.0);
  for (double y : {0.05, 0.3, 0.77, 0.999}) {
    CHECK(phi_integrand_f(3, y) >= 1.0);
    CHECK(phi_integrand_g(1.0 / 3.0, y) <= 0.0);
  }
}

TEST_CASE("monotonicity scan") {
  const MahlerScan scan = monotonicity_scan(2, 50);
  CHECK(scan.strictly_increasing);
  CHECK(scan.endpoint_left_rel_dev < 1e-12);
  CHECK(scan.endpoint_right_rel_dev < 1e-12);
  CHECK(scan.p_grid.size() == 50);
  CHECK(scan.values.front() == 8.0);

  const MahlerScan flat = monotonicity_scan(1, 10);
  CHECK(!flat.strictly_increasing);
  for (double v : flat.values) CHECK(v == 4.0);
}

}  // TEST_SUITE mahler

// ---------------------------------------------------------------------------
TEST_SUITE("lagrangian") {

TEST_CASE("xp capacity branch table") {
  CHECK(rel(xp_capacity(1.0).value, num::kPi / 2.0) < 1e-13);
  CHECK(rel(xp_capacity(1.5).value, 2.4934837415820025333) < 1e-13);
  CHECK(rel(xp_capacity(2.0).value, num::kPi) < 1e-13);
  CHECK(rel(xp_capacity(3.0).value, 3.5332775005708999146) < 1e-13);
  CHECK(xp_capacity(kInf).value == 4.0);
  CHECK(thrown_code([] { xp_capacity(0.5); }) == ErrorCode::kDomain);

  const CapacityReport at2 = xp_capacity(2.0);
  CHECK(!at2.checks.empty());
  CHECK(at2.checks.front().passed);
}

TEST_CASE("gp quadrature against frozen values") {
  CHECK(std::abs(xp_gp(2.0, 0.0) - num::kPi / 2.0) < 1e-9);
  CHECK(std::abs(xp_gp(3.0, 0.3) - 0.88023733386009514451) < 1e-8);
  const double vmax = std::pow(0.25, 1.0 / 3.0);
  CHECK(xp_gp(3.0, vmax) == 0.0);
}

TEST_CASE("p = 2 curve lies on the simplex boundary") {
  for (double v : {0.0, 0.1, -0.1, 0.33, -0.33, 0.5, -0.5}) {
    const std::array<double, 2> w = xp_curve(2.0, v);
    CHECK(std::abs(w[0] + w[1] - num::kPi) < 1e-8);
    CHECK(w[0] >= -1e-12);
    CHECK(w[1] >= -1e-12);
  }
}

TEST_CASE("p = inf curve endpoints and symmetry") {
  const std::array<double, 2> mid = xp_curve(kInf, 0.0);
  CHECK(rel(mid[0], 2.0) < 1e-14);
  CHECK(rel(mid[1], 2.0) < 1e-14);
  const std::array<double, 2> right = xp_curve(kInf, 1.0);
  CHECK(rel(right[0], 2.0 * num::kPi) < 1e-14);
  CHECK(std::abs(right[1]) < 1e-14);
  for (double v : {0.2, 0.8}) {
    const std::array<double, 2> plus = xp_curve(kInf, v);
    const std::array<double, 2> minus = xp_curve(kInf, -v);
    CHECK(std::abs(plus[0] - minus[1]) < 1e-12);
    CHECK(std::abs(plus[1] - minus[0]) < 1e-12);
  }
}

TEST_CASE("curve samples cover the parameter range") {
  const auto samples = xp_curve_samples(1.5, 33);
  CHECK(samples.size() == 33);
  const double vmax = std::pow(0.25, 1.0 / 1.5);
  CHECK(std::abs(samples.front()[0] + vmax) < 1e-15);
  CHECK(std::abs(samples.back()[0] - vmax) < 1e-15);
  for (size_t i = 1; i < samples.size(); ++i) {
    CHECK(samples[i][0] > samples[i - 1][0]);
  }
}

TEST_CASE("omega region carries the closed-form capacity") {
  const RegionPtr omega2 = omega_p_region(2.0, 513);
  CHECK(rel(capacity_convex_toric(*omega2).value, num::kPi) < 1e-12);
  CHECK(rel(omega_p_area(2.0, 513), num::kPi * num::kPi / 2.0) < 1e-4);

  const RegionPtr omega15 = omega_p_region(1.5, 513);
  CHECK(rel(capacity_convex_toric(*omega15).value, 2.4934837415820025333) <
        1e-12);
}

TEST_CASE("xp body volume closed form") {
  CHECK(rel(volume(*xp_unit_body(1.5)), 3.4872051169904562607) < 1e-13);
  CHECK(rel(volume(*xp_unit_body(2.0)), num::kPi * num::kPi / 2.0) < 1e-13);
  CHECK(rel(volume(*xp_unit_body(kInf)), num::kPi * num::kPi) < 1e-13);
}

TEST_CASE("xp membership") {
  const std::vector<double> center{0.0, 0.0, 0.0, 0.0};
  const std::vector<double> outside{1.2, 0.0, 0.0, 0.0};
  CHECK(xp_membership(1.5, center));
  CHECK(!xp_membership(1.5, outside));
}

TEST_CASE("cube product rule") {
  const CapacityReport disk = capacity_cube_product(Body::lp_ball(2, 2.0));
  CHECK(rel(disk.value, 4.0) < 1e-12);
  CHECK(disk.provenance == "Corollary 1.7");
  CHECK(disk.checks.front().passed);

  const CapacityReport stretched = capacity_cube_product(Body::linear_image(
      Matrix::diagonal({0.5, 2.0}), Body::lp_ball(2, kInf)));
  CHECK(rel(stretched.value, 2.0) < 1e-12);

  Matrix rot(2);
  rot.at(0, 0) = std::cos(0.3);
  rot.at(0, 1) = -std::sin(0.3);
  rot.at(1, 0) = std::sin(0.3);
  rot.at(1, 1) = std::cos(0.3);
  CHECK(thrown_code([&] {
          capacity_cube_product(
              Body::linear_image(rot, Body::lp_ball(2, 2.0)));
        }) == ErrorCode::kPrecondition);
}

TEST_CASE("self-polar chain and viterbo consistency") {
  const VerificationRecord cross = selfpolar_capacity_bound(Body::lp_ball(2, 1.0));
  CHECK(cross.passed);
  CHECK(std::abs(cross.quantities.at("bound") - 4.0) < 1e-12);
  CHECK(std::abs(cross.quantities.at("worst_dual_gap")) < 1e-12);

  const VerificationRecord round = selfpolar_viterbo_check(Body::lp_ball(2, 2.0));
  CHECK(round.passed);
  CHECK(rel(round.slack, 2.0 * 9.8696044010893586188 - 16.0) < 1e-12);
}

TEST_CASE("self-polar lp family") {
  const CapacityReport report = selfpolar_capacity_lp(2, 3.0);
  CHECK(report.value == 4.0);
  CHECK(report.provenance == "Corollary 1.11");
  CHECK(report.checks.size() >= 2);
  for (const VerificationRecord& check : report.checks) CHECK(check.passed);

  const CapacityReport endpoint = selfpolar_capacity_lp(3, 1.0);
  CHECK(endpoint.checks.size() == 3);
  for (const VerificationRecord& check : endpoint.checks) CHECK(check.passed);
}

TEST_CASE("lagrangian product geometry") {
  const LagrangianProduct product(Body::lp_ball(2, kInf),
                                  Body::lp_ball(2, 1.0));
  CHECK(product.factor_dim() == 2);
  CHECK(rel(product.volume(), 8.0) < 1e-14);
  const std::vector<double> inside{0.9, 0.9, 0.3, 0.3};
  const std::vector<double> outside{0.9, 0.9, 0.8, 0.8};
  CHECK(product.contains(inside));
  CHECK(!product.contains(outside));
}

}  // TEST_SUITE lagrangian

// ---------------------------------------------------------------------------
TEST_SUITE("serialize") {

TEST_CASE("body round trip") {
  const std::string text = R"({
    "schema": 1,
    "type": "p_product",
    "p": 1.5,
    "factors": [
      {"type": "lp_ball", "dim": 2, "p": 2.0},
      {"type": "linear_image",
       "matrix": [[1.5, 0.0], [0.0, 0.75]],
       "body": {"type": "lp_ball", "dim": 2, "p": "inf"}}
    ]
  })";
  const BodyPtr body = parse_body(text);
  CHECK(body->dim() == 4);
  const BodyPtr reparsed = parse_body(body_to_json(*body));
  num::RngStream rng(3, 0);
  for (int i = 0; i < 40; ++i) {
    const std::vector<double> x = gen::random_point(rng, 4, 2.0);
    CHECK(rel(gauge(*reparsed, x), gauge(*body, x)) < 1e-14);
  }
}

TEST_CASE("region round trip") {
  const std::string text = R"({
    "schema": 1,
    "type": "product",
    "factors": [
      {"type": "simplex", "level": 1.5, "dim": 2},
      {"type": "scale", "r": 2.0,
       "region": {"type": "graph2d", "a": 1.0, "f": {"kind": "parabola", "b": 0.5}}}
    ]
  })";
  const RegionPtr region = parse_region(text);
  CHECK(region->dim() == 4);
  const RegionPtr reparsed = parse_region(region_to_json(*region));
  CHECK(rel(region_volume(*reparsed), region_volume(*region)) < 1e-14);
  CHECK(rel(capacity_convex_toric(*reparsed).value,
            capacity_convex_toric(*region).value) < 1e-14);
}

TEST_CASE("xp region type") {
  const RegionPtr region =
      parse_region(R"({"schema": 1, "type": "xp_region", "p": 2.0, "points": 129})");
  CHECK(rel(capacity_convex_toric(*region).value, num::kPi) < 1e-12);
}

TEST_CASE("parse diagnostics") {
  CHECK(thrown_code([] { parse_body("not json at all"); }) ==
        ErrorCode::kParse);
  CHECK(thrown_code([] { parse_body(R"({"type": "lp_ball", "dim": 2, "p": 2})"); }) ==
        ErrorCode::kParse);  // missing schema
  CHECK(thrown_code([] {
          parse_body(R"({"schema": 1, "type": "mystery"})");
        }) == ErrorCode::kParse);
  try {
    parse_body(R"({
      "schema": 1, "type": "cartesian",
      "factors": [
        {"type": "segment", "radius": 1.0},
        {"type": "segment"}
      ]
    })");
    CHECK(false);
  } catch (const Error& err) {
    CHECK(std::string(err.what()).find("factors[1]") != std::string::npos);
  }
  CHECK(thrown_code([] {
          parse_region(R"({"schema": 1, "type": "box", "upper": "nope"})");
        }) == ErrorCode::kParse);
}

TEST_CASE("record serialization shape") {
  const VerificationRecord record =
      VerificationRecord::make("demo/check", 1e-9, 0.5, {{"x", 1.0}});
  const nlohmann::json j = nlohmann::json::parse(record_to_json(record));
  CHECK(j.at("claim_id") == "demo/check");
  CHECK(j.at("passed") == true);
  CHECK(j.at("quantities").at("x") == 1.0);

  const CapacityReport report = capacity_convex_toric(*Region::simplex(1.0, 2));
  const nlohmann::json jr = nlohmann::json::parse(report_to_json(report));
  CHECK(jr.at("value") == 1.0);
  CHECK(jr.at("provenance") == "Theorem 1.5");
  CHECK(jr.at("candidates").size() == 2);

  MCEstimate est;
  est.mean = 1.5;
  est.std_error = 0.01;
  est.samples = 1000;
  est.seed = 7;
  const nlohmann::json je = nlohmann::json::parse(estimate_to_json(est));
  CHECK(je.at("samples") == 1000);
}

}  // TEST_SUITE serialize

// ---------------------------------------------------------------------------
TEST_SUITE("verify") {

TEST_CASE("suite registry") {
  const std::vector<std::string> names = verify::suite_names();
  CHECK(names.size() == 8);
  CHECK(names.back() == "all");
  CHECK(thrown_code([] {
          verify::Options options;
          verify::run_suite("bogus", options);
        }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("numerics suite passes") {
  verify::Options options;
  options.mc_samples = 20000;
  const std::vector<VerificationRecord> records =
      verify::run_suite("numerics", options);
  CHECK(!records.empty());
  for (const VerificationRecord& r : records) {
    CHECK_MESSAGE(r.passed, r.claim_id, " slack=", r.slack);
  }
  CHECK(verify::all_passed(records));
}

}  // TEST_SUITE verify
