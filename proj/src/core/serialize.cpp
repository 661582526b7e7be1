#include "core/serialize.hpp"

#include <cmath>
#include <functional>
#include <limits>

#include <json.hpp>

#include "core/errors.hpp"
#include "core/lagrangian.hpp"

namespace symcap {

namespace {

using nlohmann::json;

constexpr double kInf = std::numeric_limits<double>::infinity();

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::kParse, where + ": " + what);
}

json parse_text(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    fail(what, "malformed JSON");
  }
  return j;
}

void check_schema(const json& j, const char* what) {
  if (!j.is_object()) fail(what, "top-level value must be an object");
  if (!j.contains("schema")) fail(what, "missing \"schema\" field");
  if (!j["schema"].is_number_integer() || j["schema"].get<int>() != 1) {
    fail(what, "unsupported schema version (expected 1)");
  }
}

std::string type_of(const json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  if (!j.contains("type") || !j["type"].is_string()) {
    fail(where, "missing \"type\" field");
  }
  return j["type"].get<std::string>();
}

double number_field(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || !j[key].is_number()) {
    fail(where, std::string("missing numeric field \"") + key + "\"");
  }
  return j[key].get<double>();
}

int int_field(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    fail(where, std::string("missing integer field \"") + key + "\"");
  }
  return j[key].get<int>();
}

// Exponent fields accept a number or the string "inf".
double exponent_field(const json& j, const char* key,
                      const std::string& where) {
  if (!j.contains(key)) {
    fail(where, std::string("missing field \"") + key + "\"");
  }
  const json& v = j[key];
  if (v.is_string()) {
    if (v.get<std::string>() == "inf") return kInf;
    fail(where, std::string("field \"") + key +
                    "\" must be a number or \"inf\"");
  }
  if (!v.is_number()) {
    fail(where, std::string("field \"") + key +
                    "\" must be a number or \"inf\"");
  }
  return v.get<double>();
}

std::vector<double> vector_field(const json& j, const char* key,
                                 const std::string& where) {
  if (!j.contains(key) || !j[key].is_array()) {
    fail(where, std::string("missing array field \"") + key + "\"");
  }
  std::vector<double> out;
  for (const json& v : j[key]) {
    if (!v.is_number()) {
      fail(where, std::string("array \"") + key + "\" must hold numbers");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

BodyPtr body_from_json(const json& j, const std::string& where);

BodyPtr fold_body_factors(const json& j, const std::string& where,
                          const std::function<BodyPtr(BodyPtr, BodyPtr)>& join) {
  if (!j.contains("factors") || !j["factors"].is_array() ||
      j["factors"].size() < 2) {
    fail(where, "needs a \"factors\" array with at least 2 entries");
  }
  BodyPtr acc;
  size_t i = 0;
  for (const json& f : j["factors"]) {
    BodyPtr b = body_from_json(f, where + ".factors[" + std::to_string(i) + "]");
    acc = acc ? join(std::move(acc), std::move(b)) : std::move(b);
    ++i;
  }
  return acc;
}

BodyPtr body_from_json(const json& j, const std::string& where) {
  const std::string type = type_of(j, where);
  if (type == "segment") {
    return Body::segment(number_field(j, "radius", where));
  }
  if (type == "lp_ball") {
    return Body::lp_ball(int_field(j, "dim", where),
                         exponent_field(j, "p", where));
  }
  if (type == "cartesian") {
    return fold_body_factors(j, where, [](BodyPtr l, BodyPtr r) {
      return Body::cartesian(std::move(l), std::move(r));
    });
  }
  if (type == "p_product") {
    const double p = exponent_field(j, "p", where);
    return fold_body_factors(j, where, [p](BodyPtr l, BodyPtr r) {
      return Body::p_product(p, std::move(l), std::move(r));
    });
  }
  if (type == "linear_image") {
    if (!j.contains("matrix") || !j["matrix"].is_array()) {
      fail(where, "linear_image needs a \"matrix\" array of rows");
    }
    const json& rows = j["matrix"];
    const int n = static_cast<int>(rows.size());
    if (n == 0) fail(where, "matrix must be nonempty");
    Matrix m(n);
    for (int i = 0; i < n; ++i) {
      if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != n) {
        fail(where, "matrix must be square (row-major rows)");
      }
      for (int k = 0; k < n; ++k) {
        if (!rows[i][k].is_number()) fail(where, "matrix entries must be numbers");
        m.at(i, k) = rows[i][k].get<double>();
      }
    }
    if (!j.contains("body")) fail(where, "linear_image needs a \"body\" field");
    return Body::linear_image(m, body_from_json(j["body"], where + ".body"));
  }
  fail(where, "unknown body type \"" + type + "\"");
}

RegionPtr region_from_json(const json& j, const std::string& where);

GraphFn graph_fn_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "profile must be an object");
  if (!j.contains("kind") || !j["kind"].is_string()) {
    fail(where, "profile needs a \"kind\" field");
  }
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "line") return graph_fn::Line{number_field(j, "b", where)};
  if (kind == "parabola") return graph_fn::Parabola{number_field(j, "b", where)};
  if (kind == "power_sum") {
    return graph_fn::PowerSum{number_field(j, "exponent", where)};
  }
  if (kind == "table") {
    graph_fn::Table t;
    t.x = vector_field(j, "x", where);
    t.y = vector_field(j, "y", where);
    return t;
  }
  fail(where, "unknown profile kind \"" + kind + "\"");
}

RegionPtr region_from_json(const json& j, const std::string& where) {
  const std::string type = type_of(j, where);
  if (type == "box") {
    return Region::box(vector_field(j, "upper", where));
  }
  if (type == "simplex") {
    return Region::simplex(number_field(j, "level", where),
                           int_field(j, "dim", where));
  }
  if (type == "orthant_of_body") {
    if (!j.contains("body")) fail(where, "orthant_of_body needs \"body\"");
    return Region::orthant_of_body(body_from_json(j["body"], where + ".body"));
  }
  if (type == "graph2d") {
    if (!j.contains("f")) fail(where, "graph2d needs a profile field \"f\"");
    return Region::graph2d(number_field(j, "a", where),
                           graph_fn_from_json(j["f"], where + ".f"));
  }
  if (type == "product") {
    if (!j.contains("factors") || !j["factors"].is_array() ||
        j["factors"].size() < 2) {
      fail(where, "product needs a \"factors\" array with at least 2 entries");
    }
    RegionPtr acc;
    size_t i = 0;
    for (const json& f : j["factors"]) {
      RegionPtr r =
          region_from_json(f, where + ".factors[" + std::to_string(i) + "]");
      acc = acc ? Region::product(std::move(acc), std::move(r)) : std::move(r);
      ++i;
    }
    return acc;
  }
  if (type == "scale") {
    if (!j.contains("region")) fail(where, "scale needs a \"region\" field");
    return Region::scale(number_field(j, "r", where),
                         region_from_json(j["region"], where + ".region"));
  }
  if (type == "xp_region") {
    const double p = exponent_field(j, "p", where);
    int points = 4096;
    if (j.contains("points")) points = int_field(j, "points", where);
    return omega_p_region(p, points);
  }
  fail(where, "unknown region type \"" + type + "\"");
}

json exponent_to_json(double p) {
  if (std::isinf(p)) return json("inf");
  return json(p);
}

json body_to_json_impl(const Body& body) {
  json j;
  switch (body.kind()) {
    case BodyKind::kSegment:
      j["type"] = "segment";
      j["radius"] = body.radius();
      break;
    case BodyKind::kLpBall:
      j["type"] = "lp_ball";
      j["dim"] = body.dim();
      j["p"] = exponent_to_json(body.p());
      break;
    case BodyKind::kCartesian:
      j["type"] = "cartesian";
      j["factors"] = {body_to_json_impl(*body.left()),
                      body_to_json_impl(*body.right())};
      break;
    case BodyKind::kPProduct:
      j["type"] = "p_product";
      j["p"] = exponent_to_json(body.p());
      j["factors"] = {body_to_json_impl(*body.left()),
                      body_to_json_impl(*body.right())};
      break;
    case BodyKind::kLinearImage: {
      j["type"] = "linear_image";
      json rows = json::array();
      const Matrix& m = body.map();
      for (int i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (int k = 0; k < m.size(); ++k) row.push_back(m.at(i, k));
        rows.push_back(std::move(row));
      }
      j["matrix"] = std::move(rows);
      j["body"] = body_to_json_impl(*body.child());
      break;
    }
  }
  return j;
}

json region_to_json_impl(const Region& region) {
  json j;
  switch (region.kind()) {
    case RegionKind::kBox:
      j["type"] = "box";
      j["upper"] = region.upper();
      break;
    case RegionKind::kSimplex:
      j["type"] = "simplex";
      j["level"] = region.level();
      j["dim"] = region.dim();
      break;
    case RegionKind::kOrthant:
      j["type"] = "orthant_of_body";
      j["body"] = body_to_json_impl(*region.body());
      break;
    case RegionKind::kGraph2D: {
      j["type"] = "graph2d";
      j["a"] = region.a();
      json f;
      if (const auto* tab = std::get_if<graph_fn::Table>(&region.fn())) {
        f["kind"] = "table";
        f["x"] = tab->x;
        f["y"] = tab->y;
      } else if (const auto* ln = std::get_if<graph_fn::Line>(&region.fn())) {
        f["kind"] = "line";
        f["b"] = ln->b;
      } else if (const auto* par =
                     std::get_if<graph_fn::Parabola>(&region.fn())) {
        f["kind"] = "parabola";
        f["b"] = par->b;
      } else {
        f["kind"] = "power_sum";
        f["exponent"] = std::get<graph_fn::PowerSum>(region.fn()).exponent;
      }
      j["f"] = std::move(f);
      break;
    }
    case RegionKind::kProduct:
      j["type"] = "product";
      j["factors"] = {region_to_json_impl(*region.left()),
                      region_to_json_impl(*region.right())};
      break;
    case RegionKind::kScale:
      j["type"] = "scale";
      j["r"] = region.factor();
      j["region"] = region_to_json_impl(*region.inner());
      break;
  }
  return j;
}

json record_to_json_impl(const VerificationRecord& r) {
  json j;
  j["claim_id"] = r.claim_id;
  j["quantities"] = r.quantities;
  j["tolerance"] = r.tolerance;
  j["slack"] = r.slack;
  j["passed"] = r.passed;
  return j;
}

}  // namespace

BodyPtr parse_body(const std::string& text) {
  json j = parse_text(text, "parse_body");
  check_schema(j, "parse_body");
  return body_from_json(j, "body");
}

RegionPtr parse_region(const std::string& text) {
  json j = parse_text(text, "parse_region");
  check_schema(j, "parse_region");
  return region_from_json(j, "region");
}

std::string body_to_json(const Body& body) {
  json j = body_to_json_impl(body);
  j["schema"] = 1;
  return j.dump(2);
}

std::string region_to_json(const Region& region) {
  json j = region_to_json_impl(region);
  j["schema"] = 1;
  return j.dump(2);
}

std::string record_to_json(const VerificationRecord& record) {
  return record_to_json_impl(record).dump(2);
}

std::string records_to_json(const std::vector<VerificationRecord>& records) {
  json arr = json::array();
  for (const VerificationRecord& r : records) {
    arr.push_back(record_to_json_impl(r));
  }
  return arr.dump(2);
}

std::string report_to_json(const CapacityReport& report) {
  json j;
  j["value"] = report.value;
  j["provenance"] = report.provenance;
  json cands = json::array();
  for (const CapacityReport::Candidate& c : report.candidates) {
    json jc;
    jc["vector"] = c.vector;
    jc["value"] = c.value;
    cands.push_back(std::move(jc));
  }
  j["candidates"] = std::move(cands);
  json checks = json::array();
  for (const VerificationRecord& r : report.checks) {
    checks.push_back(record_to_json_impl(r));
  }
  j["checks"] = std::move(checks);
  return j.dump(2);
}

std::string estimate_to_json(const MCEstimate& estimate) {
  json j;
  j["mean"] = estimate.mean;
  j["std_error"] = estimate.std_error;
  j["samples"] = estimate.samples;
  j["seed"] = estimate.seed;
  return j.dump(2);
}

}  // namespace symcap
