#pragma once

#include "core/bodies.hpp"
#include "core/numerics.hpp"
#include "core/toric.hpp"

namespace symcap::gen {

/// Random body expression tree of the given dimension. Trees mix segments,
/// l_p balls, Cartesian/p-products, and (unless unconditional_only) dense
/// well-conditioned linear images.
BodyPtr random_body(num::RngStream& rng, int dim, bool unconditional_only);

/// Random invertible matrix with singular values in [0.5, 2]: a product of
/// plane rotations around a diagonal core.
Matrix random_well_conditioned(num::RngStream& rng, int n);

/// Random diagonal matrix with entries in [0.5, 2] (random signs).
Matrix random_diagonal(num::RngStream& rng, int n);

/// Random convex region of dimension 2 or 3 (boxes, simplices, orthants of
/// unconditional bodies, concave-profile graphs, products, scalings).
RegionPtr random_convex_region(num::RngStream& rng, int dim);

/// Random concave region (graph with convex profile hitting zero, possibly
/// scaled, or a simplex).
RegionPtr random_concave_region(num::RngStream& rng);

/// Random point of the cube [-scale, scale]^dim.
std::vector<double> random_point(num::RngStream& rng, int dim, double scale);

}  // namespace symcap::gen
