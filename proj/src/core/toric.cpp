#include "core/toric.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <string>

#include "core/errors.hpp"
#include "core/numerics.hpp"

namespace symcap {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

void check_dim(const Region& region, std::span<const double> v,
               const char* what) {
  if (static_cast<int>(v.size()) != region.dim()) {
    throw Error(ErrorCode::kDimension,
                std::string(what) + ": vector has dimension " +
                    std::to_string(v.size()) + ", region has dimension " +
                    std::to_string(region.dim()));
  }
}

void check_nonnegative(std::span<const double> v, const char* what) {
  for (double vi : v) {
    if (!(vi >= 0.0)) {
      throw Error(ErrorCode::kDomain,
                  std::string(what) + ": direction must be componentwise >= 0");
    }
  }
}

void check_positive(std::span<const double> v, const char* what) {
  for (double vi : v) {
    if (!(vi > 0.0)) {
      throw Error(ErrorCode::kDomain,
                  std::string(what) + ": direction must be componentwise > 0");
    }
  }
}

// All nonnegative integer vectors of length `parts` summing to `total`, each
// entry >= min_value, in lexicographic order.
void enumerate_compositions(int total, int parts, int min_value,
                            std::vector<int>& prefix,
                            std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    if (total >= min_value) {
      prefix.push_back(total);
      out.push_back(prefix);
      prefix.pop_back();
    }
    return;
  }
  for (int v = min_value; v <= total - min_value * (parts - 1); ++v) {
    prefix.push_back(v);
    enumerate_compositions(total - v, parts - 1, min_value, prefix, out);
    prefix.pop_back();
  }
}

std::vector<std::vector<int>> compositions(int total, int parts,
                                           int min_value) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  enumerate_compositions(total, parts, min_value, prefix, out);
  return out;
}

double golden_minimize(const std::function<double(double)>& f, double lo,
                       double hi) {
  constexpr double kInvPhi = 0.61803398874989484820;
  double c = hi - kInvPhi * (hi - lo);
  double d = lo + kInvPhi * (hi - lo);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 200 && (hi - lo) > 1e-13 * (1.0 + std::abs(lo) + std::abs(hi)); ++it) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - kInvPhi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + kInvPhi * (hi - lo);
      fd = f(d);
    }
  }
  return std::min(fc, fd);
}

bool fn_is_table(const GraphFn& fn) {
  return std::holds_alternative<graph_fn::Table>(fn);
}

// Sample abscissae for scanning a graph objective: table nodes (where a
// piecewise-linear objective attains its extrema exactly) or a uniform grid.
std::vector<double> graph_scan_points(const Region& region, int grid) {
  if (fn_is_table(region.fn())) {
    return std::get<graph_fn::Table>(region.fn()).x;
  }
  std::vector<double> xs(grid + 1);
  for (int i = 0; i <= grid; ++i) {
    xs[i] = region.a() * static_cast<double>(i) / grid;
  }
  return xs;
}

// Minimize obj over [0, a]: scan, then golden-refine the best few brackets
// unless the profile is a table (node scan is already exact there).
double graph_minimize(const Region& region,
                      const std::function<double(double)>& obj, int grid,
                      int refine_candidates) {
  const std::vector<double> xs = graph_scan_points(region, grid);
  const size_t m = xs.size();
  std::vector<double> vals(m);
  for (size_t i = 0; i < m; ++i) vals[i] = obj(xs[i]);
  std::vector<size_t> order(m);
  std::iota(order.begin(), order.end(), size_t{0});
  std::partial_sort(order.begin(),
                    order.begin() + std::min<size_t>(refine_candidates, m),
                    order.end(),
                    [&](size_t i, size_t j) { return vals[i] < vals[j]; });
  double best = vals[order[0]];
  if (fn_is_table(region.fn())) return best;
  for (size_t k = 0; k < std::min<size_t>(refine_candidates, m); ++k) {
    const size_t i = order[k];
    const double lo = xs[i > 0 ? i - 1 : 0];
    const double hi = xs[i + 1 < m ? i + 1 : m - 1];
    if (hi > lo) best = std::min(best, golden_minimize(obj, lo, hi));
  }
  return best;
}

double graph_maximize(const Region& region,
                      const std::function<double(double)>& obj, int grid,
                      int refine_candidates) {
  return -graph_minimize(
      region, [&](double x) { return -obj(x); }, grid, refine_candidates);
}

}  // namespace

RegionPtr Region::box(std::vector<double> upper) {
  if (upper.empty()) {
    throw Error(ErrorCode::kDimension, "box: needs at least one side");
  }
  for (double u : upper) {
    if (!(u > 0.0) || !std::isfinite(u)) {
      throw Error(ErrorCode::kDomain, "box: sides must be positive and finite");
    }
  }
  auto r = std::shared_ptr<Region>(new Region());
  r->kind_ = RegionKind::kBox;
  r->dim_ = static_cast<int>(upper.size());
  r->upper_ = std::move(upper);
  return r;
}

RegionPtr Region::simplex(double level, int dim) {
  if (dim < 1) {
    throw Error(ErrorCode::kDimension, "simplex: dimension must be >= 1");
  }
  if (!(level > 0.0) || !std::isfinite(level)) {
    throw Error(ErrorCode::kDomain, "simplex: level must be positive and finite");
  }
  auto r = std::shared_ptr<Region>(new Region());
  r->kind_ = RegionKind::kSimplex;
  r->dim_ = dim;
  r->level_ = level;
  return r;
}

RegionPtr Region::orthant_of_body(BodyPtr body) {
  if (!body) {
    throw Error(ErrorCode::kInvalidArgument, "orthant_of_body: null body");
  }
  if (!is_coordinate_unconditional(*body)) {
    throw Error(ErrorCode::kPrecondition,
                "orthant_of_body: body must be coordinate-unconditional");
  }
  auto r = std::shared_ptr<Region>(new Region());
  r->kind_ = RegionKind::kOrthant;
  r->dim_ = body->dim();
  r->body_ = std::move(body);
  return r;
}

RegionPtr Region::graph2d(double a, GraphFn f) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw Error(ErrorCode::kDomain, "graph2d: width must be positive and finite");
  }
  if (auto* tab = std::get_if<graph_fn::Table>(&f)) {
    if (tab->x.size() != tab->y.size() || tab->x.size() < 2) {
      throw Error(ErrorCode::kInvalidArgument,
                  "graph2d: table needs matching x/y of length >= 2");
    }
    if (std::abs(tab->x.front()) > 1e-9 * a ||
        std::abs(tab->x.back() - a) > 1e-9 * a) {
      throw Error(ErrorCode::kDomain, "graph2d: table must span [0, a]");
    }
    tab->x.front() = 0.0;
    tab->x.back() = a;
    for (size_t i = 1; i < tab->x.size(); ++i) {
      if (!(tab->x[i] > tab->x[i - 1])) {
        throw Error(ErrorCode::kDomain,
                    "graph2d: table abscissae must be strictly increasing");
      }
    }
    for (double yv : tab->y) {
      if (!(yv >= -1e-9 * (1.0 + std::abs(tab->y.front()))) ||
          !std::isfinite(yv)) {
        throw Error(ErrorCode::kDomain, "graph2d: table values must be >= 0");
      }
    }
  } else if (auto* ln = std::get_if<graph_fn::Line>(&f)) {
    if (!(ln->b > 0.0)) {
      throw Error(ErrorCode::kDomain, "graph2d: line height must be positive");
    }
  } else if (auto* par = std::get_if<graph_fn::Parabola>(&f)) {
    if (!(par->b > 0.0)) {
      throw Error(ErrorCode::kDomain,
                  "graph2d: parabola height must be positive");
    }
  } else if (auto* ps = std::get_if<graph_fn::PowerSum>(&f)) {
    if (!(ps->exponent > 0.0) || !std::isfinite(ps->exponent)) {
      throw Error(ErrorCode::kDomain,
                  "graph2d: power-sum exponent must be positive and finite");
    }
  }

  auto r = std::shared_ptr<Region>(new Region());
  r->kind_ = RegionKind::kGraph2D;
  r->dim_ = 2;
  r->a_ = a;
  r->fn_ = std::move(f);

  // The profile must start positive and never increase.
  const double f0 = graph_eval(*r, 0.0);
  if (!(f0 > 0.0)) {
    throw Error(ErrorCode::kDomain, "graph2d: profile must satisfy f(0) > 0");
  }
  const double slack = 1e-9 * (1.0 + f0);
  double prev = f0;
  for (int i = 1; i <= 512; ++i) {
    const double x = a * static_cast<double>(i) / 512;
    const double y = graph_eval(*r, x);
    if (y > prev + slack) {
      throw Error(ErrorCode::kDomain, "graph2d: profile must be nonincreasing");
    }
    prev = y;
  }
  return r;
}

RegionPtr Region::product(RegionPtr left, RegionPtr right) {
  if (!left || !right) {
    throw Error(ErrorCode::kInvalidArgument, "product: null factor");
  }
  auto r = std::shared_ptr<Region>(new Region());
  r->kind_ = RegionKind::kProduct;
  r->dim_ = left->dim() + right->dim();
  r->left_ = std::move(left);
  r->right_ = std::move(right);
  return r;
}

RegionPtr Region::scale(double factor, RegionPtr inner) {
  if (!inner) {
    throw Error(ErrorCode::kInvalidArgument, "scale: null region");
  }
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw Error(ErrorCode::kDomain, "scale: factor must be positive and finite");
  }
  auto r = std::shared_ptr<Region>(new Region());
  r->kind_ = RegionKind::kScale;
  r->dim_ = inner->dim();
  r->factor_ = factor;
  r->left_ = std::move(inner);
  return r;
}

double graph_eval(const Region& region, double x) {
  if (region.kind() != RegionKind::kGraph2D) {
    throw Error(ErrorCode::kPrecondition, "graph_eval: not a graph region");
  }
  const double a = region.a();
  x = std::clamp(x, 0.0, a);
  const GraphFn& fn = region.fn();
  if (const auto* tab = std::get_if<graph_fn::Table>(&fn)) {
    const auto& xs = tab->x;
    const auto& ys = tab->y;
    auto it = std::upper_bound(xs.begin(), xs.end(), x);
    if (it == xs.begin()) return ys.front();
    if (it == xs.end()) return ys.back();
    const size_t j = static_cast<size_t>(it - xs.begin());
    const double t = (x - xs[j - 1]) / (xs[j] - xs[j - 1]);
    return ys[j - 1] + t * (ys[j] - ys[j - 1]);
  }
  if (const auto* ln = std::get_if<graph_fn::Line>(&fn)) {
    return ln->b * (1.0 - x / a);
  }
  if (const auto* par = std::get_if<graph_fn::Parabola>(&fn)) {
    const double t = x / a;
    return par->b * (1.0 - t * t);
  }
  const auto& ps = std::get<graph_fn::PowerSum>(fn);
  const double e = ps.exponent;
  const double rad = std::max(0.0, std::pow(a, e) - std::pow(x, e));
  return std::pow(rad, 1.0 / e);
}

double support_norm(const Region& region, std::span<const double> v) {
  check_dim(region, v, "support_norm");
  check_nonnegative(v, "support_norm");
  switch (region.kind()) {
    case RegionKind::kBox: {
      double s = 0.0;
      for (int i = 0; i < region.dim(); ++i) s += v[i] * region.upper()[i];
      return s;
    }
    case RegionKind::kSimplex: {
      double m = 0.0;
      for (double vi : v) m = std::max(m, vi);
      return region.level() * m;
    }
    case RegionKind::kOrthant:
      return support(*region.body(), v);
    case RegionKind::kGraph2D: {
      const double v0 = v[0], v1 = v[1];
      auto obj = [&](double x) { return v0 * x + v1 * graph_eval(region, x); };
      return graph_maximize(region, obj, 4096, 3);
    }
    case RegionKind::kProduct: {
      const int k = region.left()->dim();
      return support_norm(*region.left(), v.subspan(0, k)) +
             support_norm(*region.right(), v.subspan(k));
    }
    case RegionKind::kScale:
      return region.factor() * support_norm(*region.inner(), v);
  }
  throw Error(ErrorCode::kInternal, "support_norm: unknown region kind");
}

double min_inner(const Region& region, std::span<const double> v) {
  check_dim(region, v, "min_inner");
  check_positive(v, "min_inner");
  switch (region.kind()) {
    case RegionKind::kSimplex: {
      // The boundary portion in the open orthant is the diagonal face.
      double m = v[0];
      for (double vi : v) m = std::min(m, vi);
      return region.level() * m;
    }
    case RegionKind::kGraph2D: {
      const double v0 = v[0], v1 = v[1];
      auto obj = [&](double x) { return v0 * x + v1 * graph_eval(region, x); };
      double best = graph_minimize(region, obj, 10000, 10);
      const double fa = graph_eval(region, region.a());
      if (fa > 1e-12 * (1.0 + graph_eval(region, 0.0))) {
        // Right wall {a} x [0, f(a)] is part of the boundary portion.
        best = std::min(best, v0 * region.a());
      }
      return best;
    }
    case RegionKind::kScale:
      return region.factor() * min_inner(*region.inner(), v);
    case RegionKind::kBox:
    case RegionKind::kOrthant:
      if (region.dim() == 1) return v[0] * axis_support(region)[0];
      [[fallthrough]];
    default:
      throw Error(ErrorCode::kPrecondition,
                  "min_inner: region kind does not have a concave boundary "
                  "description");
  }
}

namespace {

// Chord tests for the graph profile on nested grids. Returns +1 if convex
// within slack, -1 if concave within slack, 0 if both (affine within slack),
// and records a violating midpoint for whichever property fails.
struct ChordResult {
  bool convex_ok = true;
  bool concave_ok = true;
  std::vector<std::vector<double>> convex_witnesses;
  std::vector<std::vector<double>> concave_witnesses;
};

ChordResult chord_tests(const Region& region) {
  ChordResult res;
  const double a = region.a();
  const double slack = 1e-7 * (1.0 + graph_eval(region, 0.0));

  auto record = [&](std::vector<std::vector<double>>& ws, double x, double y) {
    if (ws.size() < 8) ws.push_back({x, y});
  };

  // Coarse grid, all aligned pairs: catches global shape. The profile is
  // concave (hat region convex) if every midpoint sits at or above the
  // chord; convex (complement convex) if at or below.
  constexpr int kCoarse = 64;
  std::vector<double> fy(kCoarse + 1);
  for (int i = 0; i <= kCoarse; ++i) {
    fy[i] = graph_eval(region, a * static_cast<double>(i) / kCoarse);
  }
  bool f_concave = true, f_convex = true;
  for (int i = 0; i <= kCoarse; ++i) {
    for (int j = i + 2; j <= kCoarse; j += 2) {
      const int m = (i + j) / 2;
      const double chord = 0.5 * (fy[i] + fy[j]);
      const double xm = a * static_cast<double>(m) / kCoarse;
      if (fy[m] < chord - slack) {
        if (f_concave) record(res.convex_witnesses, xm, fy[m]);
        f_concave = false;
      }
      if (fy[m] > chord + slack) {
        if (f_convex) record(res.concave_witnesses, xm, fy[m]);
        f_convex = false;
      }
    }
  }

  // Fine consecutive-triple pass: catches local wiggles the coarse grid
  // cannot see.
  constexpr int kFine = 1024;
  double y0 = graph_eval(region, 0.0);
  double y1 = graph_eval(region, a / kFine);
  for (int k = 1; k < kFine; ++k) {
    const double y2 = graph_eval(region, a * static_cast<double>(k + 1) / kFine);
    const double chord = 0.5 * (y0 + y2);
    const double xm = a * static_cast<double>(k) / kFine;
    if (y1 < chord - slack) {
      if (f_concave) record(res.convex_witnesses, xm, y1);
      f_concave = false;
    }
    if (y1 > chord + slack) {
      if (f_convex) record(res.concave_witnesses, xm, y1);
      f_convex = false;
    }
    y0 = y1;
    y1 = y2;
  }

  res.convex_ok = f_concave;  // hat convex <=> profile concave
  const double fa = graph_eval(region, a);
  res.concave_ok = f_convex && fa <= slack;  // complement convex
  return res;
}

}  // namespace

Classification classify(const Region& region) {
  Classification cls;
  switch (region.kind()) {
    case RegionKind::kBox:
      cls.convex = true;
      cls.concave = (region.dim() == 1);
      return cls;
    case RegionKind::kSimplex:
      cls.convex = true;
      cls.concave = true;
      return cls;
    case RegionKind::kOrthant:
      cls.convex = true;
      cls.concave = (region.dim() == 1);
      return cls;
    case RegionKind::kGraph2D: {
      const ChordResult chord = chord_tests(region);
      cls.convex = chord.convex_ok;
      cls.concave = chord.concave_ok;
      if (!cls.convex) cls.witnesses = chord.convex_witnesses;
      if (!cls.concave && cls.witnesses.empty()) {
        cls.witnesses = chord.concave_witnesses;
      }
      return cls;
    }
    case RegionKind::kProduct: {
      const Classification l = classify(*region.left());
      const Classification r = classify(*region.right());
      cls.convex = l.convex && r.convex;
      cls.concave = false;
      if (!cls.convex) {
        cls.witnesses = l.convex ? r.witnesses : l.witnesses;
      }
      return cls;
    }
    case RegionKind::kScale:
      cls = classify(*region.inner());
      if (!cls.witnesses.empty()) {
        for (auto& w : cls.witnesses) {
          for (double& c : w) c *= region.factor();
        }
      }
      return cls;
  }
  throw Error(ErrorCode::kInternal, "classify: unknown region kind");
}

CapacityReport capacity_convex_toric(const Region& region) {
  const Classification cls = classify(region);
  if (!cls.convex) {
    throw Error(ErrorCode::kPrecondition,
                "capacity_convex_toric: region is not convex");
  }
  const int n = region.dim();
  CapacityReport report;
  report.provenance = "Theorem 1.5";
  double best = std::numeric_limits<double>::infinity();
  for (const std::vector<int>& comp : compositions(1, n, 0)) {
    std::vector<double> v(comp.begin(), comp.end());
    const double value = support_norm(region, v);
    report.candidates.push_back({v, value});
    best = std::min(best, value);
  }
  report.value = best;
  return report;
}

namespace {

// Direct minimization of sum(w) over the boundary portion, independent of
// the candidate scan: a dense parameter sweep rather than refined search.
double direct_min_sum(const Region& region) {
  switch (region.kind()) {
    case RegionKind::kSimplex:
      return region.level();
    case RegionKind::kScale:
      return region.factor() * direct_min_sum(*region.inner());
    case RegionKind::kGraph2D: {
      constexpr int kDense = 50000;
      const double a = region.a();
      double best = std::numeric_limits<double>::infinity();
      for (int i = 0; i <= kDense; ++i) {
        const double x = a * static_cast<double>(i) / kDense;
        best = std::min(best, x + graph_eval(region, x));
      }
      return best;
    }
    case RegionKind::kBox:
    case RegionKind::kOrthant:
      if (region.dim() == 1) return axis_support(region)[0];
      [[fallthrough]];
    default:
      throw Error(ErrorCode::kPrecondition,
                  "direct_min_sum: unsupported region kind");
  }
}

}  // namespace

CapacityReport gromov_width_concave(const Region& region) {
  const Classification cls = classify(region);
  if (!cls.concave) {
    throw Error(ErrorCode::kPrecondition,
                "gromov_width_concave: region is not concave");
  }
  const int n = region.dim();
  CapacityReport report;
  report.provenance = "Remark 2.1";
  double best = -std::numeric_limits<double>::infinity();
  for (const std::vector<int>& comp : compositions(n, n, 1)) {
    std::vector<double> v(comp.begin(), comp.end());
    const double value = min_inner(region, v);
    report.candidates.push_back({v, value});
    best = std::max(best, value);
  }
  const double direct = direct_min_sum(region);
  const double tol = 1e-6 * (1.0 + std::abs(best));
  if (std::abs(best - direct) > tol) {
    throw Error(ErrorCode::kInternal,
                "gromov_width_concave: candidate scan (" + std::to_string(best) +
                    ") and direct boundary minimization (" +
                    std::to_string(direct) + ") disagree");
  }
  report.checks.push_back(VerificationRecord::make(
      "gromov-width/route-agreement", tol, -std::abs(best - direct),
      {{"candidate_scan", best}, {"direct_min", direct}}));
  report.value = best;
  return report;
}

Interval capacity_bounds_concave(const Region& region) {
  const double lower = gromov_width_concave(region).value;
  const int n = region.dim();
  double upper = std::numeric_limits<double>::infinity();
  std::vector<double> e(n, 0.0);
  for (int i = 0; i < n; ++i) {
    e[i] = 1.0;
    upper = std::min(upper, support_norm(region, e));
    e[i] = 0.0;
  }
  if (lower > upper + 1e-9 * (1.0 + std::abs(upper))) {
    throw Error(ErrorCode::kInternal,
                "capacity_bounds_concave: bracket is inverted");
  }
  return {lower, upper};
}

CapacityReport product_capacity(std::span<const RegionPtr> factors) {
  if (factors.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "product_capacity: no factors");
  }
  double best = std::numeric_limits<double>::infinity();
  RegionPtr assembled;
  for (const RegionPtr& f : factors) {
    if (!f) {
      throw Error(ErrorCode::kInvalidArgument, "product_capacity: null factor");
    }
    best = std::min(best, capacity_convex_toric(*f).value);
    assembled = assembled ? Region::product(assembled, f) : f;
  }
  CapacityReport assembled_report = capacity_convex_toric(*assembled);
  const double tol = 1e-12 * (1.0 + std::abs(best));
  const double diff = std::abs(assembled_report.value - best);
  if (diff > tol) {
    throw Error(ErrorCode::kInternal,
                "product_capacity: factor minimum and assembled product "
                "capacity disagree");
  }
  CapacityReport report;
  report.value = best;
  report.provenance = "Corollary 1.6";
  report.candidates = std::move(assembled_report.candidates);
  report.checks.push_back(VerificationRecord::make(
      "cor1.6/assembled-product", tol, -diff,
      {{"factor_min", best}, {"assembled", assembled_report.value}}));
  return report;
}

double region_volume(const Region& region) {
  switch (region.kind()) {
    case RegionKind::kBox: {
      double v = 1.0;
      for (double u : region.upper()) v *= u;
      return v;
    }
    case RegionKind::kSimplex:
      return std::pow(region.level(), region.dim()) / factorial(region.dim());
    case RegionKind::kOrthant:
      return volume(*region.body()) / std::pow(2.0, region.dim());
    case RegionKind::kGraph2D: {
      const double a = region.a();
      const GraphFn& fn = region.fn();
      if (const auto* tab = std::get_if<graph_fn::Table>(&fn)) {
        double area = 0.0;
        for (size_t i = 1; i < tab->x.size(); ++i) {
          area += 0.5 * (tab->y[i] + tab->y[i - 1]) * (tab->x[i] - tab->x[i - 1]);
        }
        return area;
      }
      if (const auto* ln = std::get_if<graph_fn::Line>(&fn)) {
        return 0.5 * a * ln->b;
      }
      if (const auto* par = std::get_if<graph_fn::Parabola>(&fn)) {
        return 2.0 / 3.0 * a * par->b;
      }
      const double e = std::get<graph_fn::PowerSum>(fn).exponent;
      // Quarter of the l_e ball of radius a.
      const double g = num::gamma_fn(1.0 + 1.0 / e);
      return a * a * g * g / num::gamma_fn(1.0 + 2.0 / e);
    }
    case RegionKind::kProduct:
      return region_volume(*region.left()) * region_volume(*region.right());
    case RegionKind::kScale:
      return std::pow(region.factor(), region.dim()) *
             region_volume(*region.inner());
  }
  throw Error(ErrorCode::kInternal, "region_volume: unknown region kind");
}

VerificationRecord viterbo_check(const Region& region) {
  const CapacityReport cap = capacity_convex_toric(region);
  const int n = region.dim();
  const double vol = region_volume(region);
  const double slack = factorial(n) * vol - std::pow(cap.value, n);
  return VerificationRecord::make(
      "viterbo/region", 1e-9, slack,
      {{"capacity", cap.value},
       {"volume", vol},
       {"dim", static_cast<double>(n)}});
}

bool region_contains(const Region& region, std::span<const double> w) {
  check_dim(region, w, "region_contains");
  constexpr double kEps = 1e-9;
  for (double wi : w) {
    if (wi < -kEps) return false;
  }
  switch (region.kind()) {
    case RegionKind::kBox: {
      for (int i = 0; i < region.dim(); ++i) {
        if (w[i] > region.upper()[i] * (1.0 + kEps) + kEps) return false;
      }
      return true;
    }
    case RegionKind::kSimplex: {
      double s = 0.0;
      for (double wi : w) s += std::max(wi, 0.0);
      return s <= region.level() * (1.0 + kEps);
    }
    case RegionKind::kOrthant:
      return gauge(*region.body(), w) <= 1.0 + kEps;
    case RegionKind::kGraph2D: {
      const double scale = 1.0 + graph_eval(region, 0.0) + region.a();
      if (w[0] > region.a() + kEps * scale) return false;
      return w[1] <= graph_eval(region, w[0]) + kEps * scale;
    }
    case RegionKind::kProduct: {
      const int k = region.left()->dim();
      return region_contains(*region.left(), w.subspan(0, k)) &&
             region_contains(*region.right(), w.subspan(k));
    }
    case RegionKind::kScale: {
      std::vector<double> scaled(w.begin(), w.end());
      for (double& c : scaled) c /= region.factor();
      return region_contains(*region.inner(), scaled);
    }
  }
  throw Error(ErrorCode::kInternal, "region_contains: unknown region kind");
}

std::vector<double> axis_support(const Region& region) {
  const int n = region.dim();
  std::vector<double> out(n, 0.0);
  std::vector<double> e(n, 0.0);
  for (int i = 0; i < n; ++i) {
    e[i] = 1.0;
    out[i] = support_norm(region, e);
    e[i] = 0.0;
  }
  return out;
}

}  // namespace symcap
