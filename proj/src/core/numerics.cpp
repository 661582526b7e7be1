#include "core/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "core/errors.hpp"

namespace symcap::num {

namespace {

// Lanczos coefficients for g = 607/128, 15 terms.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczos[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

constexpr double kSqrtTwoPi = 2.50662827463100050241576528481104525;
constexpr double kLogSqrtTwoPi = 0.91893853320467274178032973640561764;

double lanczos_series(double x) {
  double s = kLanczos[0];
  for (int i = 1; i < 15; ++i) {
    s += kLanczos[i] / (x - 1.0 + i);
  }
  return s;
}

void require_positive(double x, const char* fn) {
  if (!(x > 0.0)) {
    throw Error(ErrorCode::kDomain,
                std::string(fn) + ": argument must be positive, got " +
                    std::to_string(x));
  }
}

}  // namespace

double gamma_fn(double x) {
  require_positive(x, "gamma_fn");
  const double t = x + kLanczosG - 0.5;
  const double s = lanczos_series(x);
  return kSqrtTwoPi * s * std::exp((x - 0.5) * std::log(t) - t);
}

double log_gamma(double x) {
  require_positive(x, "log_gamma");
  const double t = x + kLanczosG - 0.5;
  const double s = lanczos_series(x);
  return kLogSqrtTwoPi + std::log(s) + (x - 0.5) * std::log(t) - t;
}

double digamma(double x) {
  require_positive(x, "digamma");
  double acc = 0.0;
  while (x < 8.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  // Asymptotic series: ln x - 1/(2x) - sum B_2k / (2k x^2k).
  const double tail =
      inv2 *
      (1.0 / 12.0 -
       inv2 * (1.0 / 120.0 -
               inv2 * (1.0 / 252.0 -
                       inv2 * (1.0 / 240.0 -
                               inv2 * (1.0 / 132.0 -
                                       inv2 * (691.0 / 32760.0 -
                                               inv2 * (1.0 / 12.0)))))));
  return acc + std::log(x) - 0.5 * inv - tail;
}

namespace {

// Gauss-Kronrod 15(7) abscissae on [-1, 1] and weights.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct GkResult {
  double value;
  double error;
};

GkResult gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);

  double fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(c - h * kXgk[i]);
    fv[14 - i] = f(c + h * kXgk[i]);
  }
  fv[7] = f(c);
  for (double v : fv) {
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::kDomain,
                  "integrate: integrand evaluated to a non-finite value");
    }
  }

  double kron = kWgk[7] * fv[7];
  for (int i = 0; i < 7; ++i) {
    kron += kWgk[i] * (fv[i] + fv[14 - i]);
  }
  double gauss = kWg[3] * fv[7];
  for (int j = 0; j < 3; ++j) {
    const int i = 2 * j + 1;
    gauss += kWg[j] * (fv[i] + fv[14 - i]);
  }
  return {h * kron, std::abs(h * (kron - gauss))};
}

struct Interval {
  double a, b, value, error;
};

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& spec) {
  if (!(std::isfinite(a) && std::isfinite(b))) {
    throw Error(ErrorCode::kDomain, "integrate: endpoints must be finite");
  }
  if (a == b) return 0.0;
  double sign = 1.0;
  if (a > b) {
    std::swap(a, b);
    sign = -1.0;
  }

  std::vector<Interval> segs;
  {
    GkResult r = gk15(f, a, b);
    segs.push_back({a, b, r.value, r.error});
  }

  auto worse = [](const Interval& x, const Interval& y) {
    return x.error < y.error;
  };
  std::make_heap(segs.begin(), segs.end(), worse);

  double total_err = segs.front().error;
  int splits = 0;
  while (total_err > spec.abs_tol) {
    if (splits >= spec.max_subdivisions) {
      throw Error(ErrorCode::kNoConvergence,
                  "integrate: failed to reach tolerance " +
                      std::to_string(spec.abs_tol) + " within " +
                      std::to_string(spec.max_subdivisions) + " subdivisions");
    }
    std::pop_heap(segs.begin(), segs.end(), worse);
    Interval seg = segs.back();
    segs.pop_back();
    total_err -= seg.error;

    const double mid = 0.5 * (seg.a + seg.b);
    if (mid <= seg.a || mid >= seg.b) {
      // Interval reached floating-point resolution; accept its estimate.
      segs.push_back(seg);
      break;
    }
    GkResult left = gk15(f, seg.a, mid);
    GkResult right = gk15(f, mid, seg.b);
    segs.push_back({seg.a, mid, left.value, left.error});
    std::push_heap(segs.begin(), segs.end(), worse);
    segs.push_back({mid, seg.b, right.value, right.error});
    std::push_heap(segs.begin(), segs.end(), worse);
    total_err += left.error + right.error;
    ++splits;
  }

  double total = 0.0;
  for (const Interval& seg : segs) total += seg.value;
  return sign * total;
}

namespace {

constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ull;

uint64_t mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

uint64_t derive_key(uint64_t seed, uint64_t stream_id) {
  const uint64_t a = mix64(seed + kGolden);
  const uint64_t b = mix64(stream_id ^ 0xD1B54A32D192ED03ull);
  return mix64(a ^ (b + kGolden));
}

}  // namespace

RngStream::RngStream(uint64_t seed, uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id), key_(derive_key(seed, stream_id)) {}

uint64_t RngStream::next_u64() {
  ++counter_;
  return mix64(key_ + counter_ * kGolden);
}

double RngStream::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi) {
  return lo + (hi - lo) * next_double();
}

int RngStream::next_int(int lo, int hi) {
  if (hi < lo) {
    throw Error(ErrorCode::kInvalidArgument, "next_int: empty range");
  }
  const uint64_t span = static_cast<uint64_t>(hi) - static_cast<uint64_t>(lo) + 1;
  return lo + static_cast<int>(next_u64() % span);
}

RngStream RngStream::substream(uint64_t id) const {
  RngStream child(seed_, stream_id_);
  child.key_ = mix64(key_ ^ mix64(id * kGolden + 0x632BE59BD9B4E019ull));
  return child;
}

}  // namespace symcap::num
