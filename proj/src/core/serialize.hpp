#pragma once

#include <string>

#include "core/bodies.hpp"
#include "core/records.hpp"
#include "core/toric.hpp"

namespace symcap {

/// Parse a body description. Top-level object must carry "schema": 1.
/// Types: segment, lp_ball, cartesian, p_product, linear_image.
/// Exponents accept the string "inf" alongside numbers.
BodyPtr parse_body(const std::string& text);

/// Parse a region description. Types: box, simplex, orthant_of_body,
/// graph2d, product, scale, xp_region.
RegionPtr parse_region(const std::string& text);

std::string body_to_json(const Body& body);
std::string region_to_json(const Region& region);

std::string record_to_json(const VerificationRecord& record);
std::string records_to_json(const std::vector<VerificationRecord>& records);
std::string report_to_json(const CapacityReport& report);
std::string estimate_to_json(const MCEstimate& estimate);

}  // namespace symcap
