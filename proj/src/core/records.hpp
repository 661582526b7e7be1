#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace symcap {

/// Outcome of checking a single quantitative claim. The convention is
/// slack >= 0 when the claim holds with room to spare; the check passes when
/// slack >= -tolerance.
struct VerificationRecord {
  std::string claim_id;
  std::map<std::string, double> quantities;
  double tolerance = 0.0;
  double slack = 0.0;
  bool passed = false;

  static VerificationRecord make(std::string claim_id, double tolerance,
                                 double slack,
                                 std::map<std::string, double> quantities = {}) {
    VerificationRecord r;
    r.claim_id = std::move(claim_id);
    r.tolerance = tolerance;
    r.slack = slack;
    r.quantities = std::move(quantities);
    r.passed = slack >= -tolerance;
    return r;
  }
};

/// Capacity value together with how it was obtained: the closed-form rule
/// used (provenance), the candidate vectors scanned with their objective
/// values, and any internal consistency checks that were run along the way.
struct CapacityReport {
  struct Candidate {
    std::vector<double> vector;
    double value = 0.0;
  };

  double value = 0.0;
  std::string provenance;
  std::vector<Candidate> candidates;
  std::vector<VerificationRecord> checks;
};

/// Monte Carlo estimate with its seed, for reproducibility.
struct MCEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  long long samples = 0;
  uint64_t seed = 0;
};

}  // namespace symcap
