#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/records.hpp"

namespace symcap::verify {

struct Options {
  uint64_t seed = 20200820;
  double tol = 1e-8;          // scale for checks without a pinned tolerance
  long long mc_samples = 1000000;
  int threads = 1;
};

/// Registered suite names, ending with "acceptance" and "all".
std::vector<std::string> suite_names();

/// Run one suite ("all" concatenates every suite in registration order).
/// Throws kInvalidArgument for unknown names.
std::vector<VerificationRecord> run_suite(const std::string& name,
                                          const Options& options);

/// The twelve-point claim battery, in its fixed order.
std::vector<VerificationRecord> run_acceptance(const Options& options);

bool all_passed(const std::vector<VerificationRecord>& records);

}  // namespace symcap::verify
