#pragma once

#include <cstdint>
#include <functional>

namespace symcap::num {

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

/// Gamma(x) for x > 0.
///
/// Lanczos approximation, relative error below 1e-13 across the representable
/// range. Overflows to +inf for x above ~171.62 (the IEEE double ceiling).
double gamma_fn(double x);

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

/// Digamma psi(x) for x > 0. Recurrence push into x >= 8, then the
/// asymptotic series through the x^-14 term.
double digamma(double x);

struct QuadratureSpec {
  double abs_tol = 1e-10;
  int max_subdivisions = 10000;
};

/// Adaptive Gauss-Kronrod 15(7) over [a, b] with global worst-interval
/// bisection. Evaluation nodes are strictly interior, so integrable endpoint
/// singularities are fine. Throws on non-finite integrand values and on
/// failure to reach abs_tol within the subdivision budget.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& spec = {});

/// Counter-based pseudo-random stream. Every draw is a pure function of
/// (seed, stream_id, counter), so substreams are cheap and the results of a
/// sharded computation do not depend on how work was split across threads.
class RngStream {
 public:
  explicit RngStream(uint64_t seed, uint64_t stream_id = 0);

  uint64_t next_u64();
  double next_double();  // uniform in [0, 1)
  double uniform(double lo, double hi);
  int next_int(int lo, int hi);  // uniform on {lo, ..., hi}

  /// Child stream with an independent, reproducible sequence.
  RngStream substream(uint64_t id) const;

  uint64_t seed() const { return seed_; }
  uint64_t stream_id() const { return stream_id_; }

 private:
  uint64_t seed_;
  uint64_t stream_id_;
  uint64_t key_;
  uint64_t counter_ = 0;
};

}  // namespace symcap::num
