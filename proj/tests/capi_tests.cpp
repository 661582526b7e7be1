// Exercises the shared library strictly through the public C header.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <limits>
#include <string>

#include <json.hpp>

#include "symcap.h"

namespace {

constexpr double kPi = 3.14159265358979323846;

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { symcap_string_free(ptr); }
  std::string str() const { return ptr == nullptr ? "" : ptr; }
};

struct OwnedBody {
  symcap_body* ptr = nullptr;
  ~OwnedBody() { symcap_body_free(ptr); }
};

struct OwnedRegion {
  symcap_region* ptr = nullptr;
  ~OwnedRegion() { symcap_region_free(ptr); }
};

}  // namespace

TEST_CASE("version and error state") {
  CHECK(std::strlen(symcap_version()) > 0);
  OwnedBody body;
  CHECK(symcap_body_from_json("][", &body.ptr) == SYMCAP_ERR_PARSE);
  CHECK(std::strlen(symcap_last_error()) > 0);
}

TEST_CASE("body lifecycle through json") {
  OwnedBody body;
  REQUIRE(symcap_body_from_json(
              R"({"schema": 1, "type": "lp_ball", "dim": 2, "p": 2.0})",
              &body.ptr) == SYMCAP_OK);
  int dim = 0;
  CHECK(symcap_body_dim(body.ptr, &dim) == SYMCAP_OK);
  CHECK(dim == 2);

  const double x[2] = {0.6, 0.8};
  double g = 0.0;
  CHECK(symcap_body_gauge(body.ptr, x, 2, &g) == SYMCAP_OK);
  CHECK(std::abs(g - 1.0) < 1e-14);

  int inside = 0;
  CHECK(symcap_body_contains(body.ptr, x, 2, &inside) == SYMCAP_OK);
  CHECK(inside == 1);

  const double v[2] = {3.0, 4.0};
  double h = 0.0;
  CHECK(symcap_body_support(body.ptr, v, 2, &h) == SYMCAP_OK);
  CHECK(std::abs(h - 5.0) < 1e-13);

  double vol = 0.0;
  CHECK(symcap_body_volume(body.ptr, &vol) == SYMCAP_OK);
  CHECK(std::abs(vol - kPi) < 1e-13);

  double m = 0.0;
  CHECK(symcap_body_mahler(body.ptr, &m) == SYMCAP_OK);
  CHECK(std::abs(m - kPi * kPi) < 1e-12);

  OwnedString json;
  CHECK(symcap_body_to_json(body.ptr, &json.ptr) == SYMCAP_OK);
  const nlohmann::json parsed = nlohmann::json::parse(json.str());
  CHECK(parsed.at("type") == "lp_ball");
  CHECK(parsed.at("schema") == 1);
}

TEST_CASE("polar through the api") {
  OwnedBody cross;
  REQUIRE(symcap_body_lp_ball(3, 1.0, &cross.ptr) == SYMCAP_OK);
  OwnedBody cube;
  REQUIRE(symcap_body_polar(cross.ptr, &cube.ptr) == SYMCAP_OK);
  double vol = 0.0;
  CHECK(symcap_body_volume(cube.ptr, &vol) == SYMCAP_OK);
  CHECK(std::abs(vol - 8.0) < 1e-13);
}

TEST_CASE("monte carlo volume") {
  OwnedBody cube;
  REQUIRE(symcap_body_lp_ball(2, std::numeric_limits<double>::infinity(),
                              &cube.ptr) == SYMCAP_OK);
  double mean = 0.0, se = 1.0;
  CHECK(symcap_body_mc_volume(cube.ptr, 10000, 42, 2, &mean, &se) ==
        SYMCAP_OK);
  CHECK(mean == 4.0);
  CHECK(se == 0.0);
}

TEST_CASE("region capacity routes") {
  OwnedRegion simplex;
  REQUIRE(symcap_region_from_json(
              R"({"schema": 1, "type": "simplex", "level": 3.141592653589793,
                  "dim": 2})",
              &simplex.ptr) == SYMCAP_OK);
  int convex = 0, concave = 0;
  CHECK(symcap_region_classify(simplex.ptr, &convex, &concave) == SYMCAP_OK);
  CHECK(convex == 1);
  CHECK(concave == 1);

  double cap = 0.0;
  OwnedString report;
  CHECK(symcap_region_capacity(simplex.ptr, &cap, &report.ptr) == SYMCAP_OK);
  CHECK(std::abs(cap - kPi) < 1e-12);
  const nlohmann::json parsed = nlohmann::json::parse(report.str());
  CHECK(parsed.at("provenance") == "Theorem 1.5");

  double width = 0.0;
  CHECK(symcap_region_gromov_width(simplex.ptr, &width, nullptr) == SYMCAP_OK);
  CHECK(std::abs(width - kPi) < 1e-12);

  double vol = 0.0;
  CHECK(symcap_region_volume(simplex.ptr, &vol) == SYMCAP_OK);
  CHECK(std::abs(vol - kPi * kPi / 2.0) < 1e-12);
}

TEST_CASE("concave region bounds") {
  OwnedRegion cusp;
  REQUIRE(symcap_region_from_json(
              R"({"schema": 1, "type": "graph2d", "a": 2.0,
                  "f": {"kind": "power_sum", "exponent": 0.5}})",
              &cusp.ptr) == SYMCAP_OK);
  double lower = 0.0, upper = 0.0;
  CHECK(symcap_region_capacity_bounds(cusp.ptr, &lower, &upper) == SYMCAP_OK);
  CHECK(std::abs(lower - 1.0) < 1e-9);
  CHECK(std::abs(upper - 2.0) < 1e-12);
  // convex route must refuse
  double cap = 0.0;
  CHECK(symcap_region_capacity(cusp.ptr, &cap, nullptr) ==
        SYMCAP_ERR_PRECONDITION);
}

TEST_CASE("lagrangian and mahler scalars") {
  OwnedBody disk;
  REQUIRE(symcap_body_lp_ball(2, 2.0, &disk.ptr) == SYMCAP_OK);
  double cap = 0.0;
  CHECK(symcap_cube_product_capacity(disk.ptr, &cap, nullptr) == SYMCAP_OK);
  CHECK(std::abs(cap - 4.0) < 1e-12);

  OwnedString record;
  CHECK(symcap_selfpolar_bound(disk.ptr, &record.ptr) == SYMCAP_OK);
  const nlohmann::json jr = nlohmann::json::parse(record.str());
  CHECK(jr.at("claim_id") == "lemma3.1/chain");
  CHECK(jr.at("passed") == true);

  double value = 0.0;
  CHECK(symcap_selfpolar_lp(2, 1.5, &value, nullptr) == SYMCAP_OK);
  CHECK(value == 4.0);

  double m = 0.0, ph = 0.0, dm = 0.0;
  CHECK(symcap_mahler_lp(2, 1.5, &m) == SYMCAP_OK);
  CHECK(std::abs(m - 9.6735966092491618698) < 1e-12);
  CHECK(symcap_mahler_phi(2, 2.0, &ph) == SYMCAP_OK);
  CHECK(ph == 0.0);
  CHECK(symcap_mahler_derivative(2, 1.5, &dm) == SYMCAP_OK);
  CHECK(std::abs(dm - 1.0524982446715789930) < 1e-12);
  CHECK(symcap_mahler_phi(2, 2.5, &ph) == SYMCAP_ERR_DOMAIN);

  double w1 = 0.0, w2 = 0.0;
  CHECK(symcap_xp_curve(2.0, 0.25, &w1, &w2) == SYMCAP_OK);
  CHECK(std::abs(w1 + w2 - kPi) < 1e-8);
  double xp_cap = 0.0;
  CHECK(symcap_xp_capacity(2.0, &xp_cap, nullptr) == SYMCAP_OK);
  CHECK(std::abs(xp_cap - kPi) < 1e-13);
}

TEST_CASE("verify suites through the api") {
  OwnedString records;
  int all_passed = 0;
  REQUIRE(symcap_verify_run("numerics", 20200820, 0.0, 20000, 1, &records.ptr,
                            &all_passed) == SYMCAP_OK);
  CHECK(all_passed == 1);
  const nlohmann::json parsed = nlohmann::json::parse(records.str());
  CHECK(parsed.is_array());
  CHECK(parsed.size() > 3);
  for (const auto& record : parsed) {
    CHECK(record.at("passed") == true);
  }

  OwnedString bad;
  CHECK(symcap_verify_run("nope", 1, 0.0, 0, 0, &bad.ptr, &all_passed) ==
        SYMCAP_ERR_INVALID_ARGUMENT);
}

TEST_CASE("null argument handling") {
  CHECK(symcap_body_from_json(nullptr, nullptr) ==
        SYMCAP_ERR_INVALID_ARGUMENT);
  CHECK(symcap_body_dim(nullptr, nullptr) == SYMCAP_ERR_INVALID_ARGUMENT);
  double out = 0.0;
  CHECK(symcap_mahler_lp(0, 1.5, &out) == SYMCAP_ERR_DIMENSION);
  symcap_body_free(nullptr);      // must be safe
  symcap_region_free(nullptr);    // must be safe
  symcap_string_free(nullptr);    // must be safe
}
