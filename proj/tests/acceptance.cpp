// Acceptance gate: runs the fixed twelve-point claim battery and prints one
// pass/fail line per criterion. Exit status is the number of failures.
#include <cstdio>
#include <exception>
#include <vector>

#include "core/records.hpp"
#include "core/verify.hpp"

int main() {
  symcap::verify::Options options;  // pinned defaults
  std::vector<symcap::VerificationRecord> records;
  try {
    records = symcap::verify::run_acceptance(options);
  } catch (const std::exception& err) {
    std::fprintf(stderr, "acceptance battery aborted: %s\n", err.what());
    return 12;
  }

  int failures = 0;
  for (size_t i = 0; i < records.size(); ++i) {
    const symcap::VerificationRecord& r = records[i];
    if (!r.passed) ++failures;
    std::printf("[%s] criterion %zu: %s (slack=%.6g, tol=%.6g)\n",
                r.passed ? "PASS" : "FAIL", i + 1, r.claim_id.c_str(), r.slack,
                r.tolerance);
  }
  std::printf("%zu of %zu acceptance criteria passed\n",
              records.size() - static_cast<size_t>(failures), records.size());
  return failures;
}
