#pragma once

#include <array>
#include <functional>
#include <span>
#include <vector>

#include "core/numerics.hpp"
#include "core/records.hpp"

namespace symcap::oracle {

using MembershipFn = std::function<bool(std::span<const double>)>;

struct BBox {
  std::vector<double> lo;
  std::vector<double> hi;
};

/// Monte Carlo volume from membership sampling. Each sample draws from its
/// own substream, so the estimate depends only on (seed, stream) and the
/// sample count, not on the thread split.
MCEstimate mc_volume(const MembershipFn& member, const BBox& box,
                     long long samples, const num::RngStream& rng,
                     int threads = 1);

/// sup of <v, x> over member points of an inclusive-endpoint uniform grid on
/// the box, resolution+1 points per axis. Throws if no grid point is a member.
double grid_support(const MembershipFn& member, const BBox& box,
                    std::span<const double> v, int resolution);

/// Per-axis maxima of member grid points (single sweep over the same grid).
std::vector<double> grid_axis_maxima(const MembershipFn& member,
                                     const BBox& box, int resolution);

/// Central difference (f(x+h) - f(x-h)) / 2h.
double finite_difference(const std::function<double(double)>& f, double x,
                         double h);

/// Signed polygon area by the shoelace formula, returned as an absolute
/// value. Self-intersection is rejected for small polygons (full pairwise
/// segment test); for large ones only monotone polylines are certified.
double shoelace_area(std::span<const std::array<double, 2>> points);

}  // namespace symcap::oracle
