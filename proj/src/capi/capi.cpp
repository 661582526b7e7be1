#include "symcap.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <span>
#include <string>
#include <vector>

#include "core/bodies.hpp"
#include "core/errors.hpp"
#include "core/lagrangian.hpp"
#include "core/mahler.hpp"
#include "core/numerics.hpp"
#include "core/oracles.hpp"
#include "core/serialize.hpp"
#include "core/toric.hpp"
#include "core/verify.hpp"

struct symcap_body {
  symcap::BodyPtr ptr;
};

struct symcap_region {
  symcap::RegionPtr ptr;
};

namespace {

thread_local std::string g_last_error;

symcap_status status_of(symcap::ErrorCode code) {
  switch (code) {
    case symcap::ErrorCode::kInvalidArgument:
      return SYMCAP_ERR_INVALID_ARGUMENT;
    case symcap::ErrorCode::kParse:
      return SYMCAP_ERR_PARSE;
    case symcap::ErrorCode::kDimension:
      return SYMCAP_ERR_DIMENSION;
    case symcap::ErrorCode::kDomain:
      return SYMCAP_ERR_DOMAIN;
    case symcap::ErrorCode::kPrecondition:
      return SYMCAP_ERR_PRECONDITION;
    case symcap::ErrorCode::kNoConvergence:
      return SYMCAP_ERR_NO_CONVERGENCE;
    case symcap::ErrorCode::kInternal:
      return SYMCAP_ERR_INTERNAL;
  }
  return SYMCAP_ERR_INTERNAL;
}

template <typename Fn>
symcap_status wrap(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return SYMCAP_OK;
  } catch (const symcap::Error& err) {
    g_last_error = err.what();
    return status_of(err.code());
  } catch (const std::exception& err) {
    g_last_error = err.what();
    return SYMCAP_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return SYMCAP_ERR_INTERNAL;
  }
}

char* copy_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

void require(bool ok, const char* message) {
  if (!ok) {
    throw symcap::Error(symcap::ErrorCode::kInvalidArgument, message);
  }
}

std::span<const double> as_span(const double* data, size_t n) {
  require(data != nullptr || n == 0, "null vector argument");
  return {data, n};
}

}  // namespace

extern "C" {

const char* symcap_version(void) { return "1.0.0"; }

const char* symcap_last_error(void) { return g_last_error.c_str(); }

void symcap_string_free(char* text) { std::free(text); }

symcap_status symcap_body_from_json(const char* json, symcap_body** out) {
  return wrap([&] {
    require(json != nullptr && out != nullptr, "null argument");
    *out = new symcap_body{symcap::parse_body(json)};
  });
}

symcap_status symcap_region_from_json(const char* json, symcap_region** out) {
  return wrap([&] {
    require(json != nullptr && out != nullptr, "null argument");
    *out = new symcap_region{symcap::parse_region(json)};
  });
}

symcap_status symcap_body_to_json(const symcap_body* body, char** out_json) {
  return wrap([&] {
    require(body != nullptr && out_json != nullptr, "null argument");
    *out_json = copy_string(symcap::body_to_json(*body->ptr));
  });
}

symcap_status symcap_region_to_json(const symcap_region* region,
                                    char** out_json) {
  return wrap([&] {
    require(region != nullptr && out_json != nullptr, "null argument");
    *out_json = copy_string(symcap::region_to_json(*region->ptr));
  });
}

void symcap_body_free(symcap_body* body) { delete body; }

void symcap_region_free(symcap_region* region) { delete region; }

symcap_status symcap_body_lp_ball(int dim, double p, symcap_body** out) {
  return wrap([&] {
    require(out != nullptr, "null argument");
    *out = new symcap_body{symcap::Body::lp_ball(dim, p)};
  });
}

symcap_status symcap_body_polar(const symcap_body* body, symcap_body** out) {
  return wrap([&] {
    require(body != nullptr && out != nullptr, "null argument");
    *out = new symcap_body{symcap::polar(body->ptr)};
  });
}

symcap_status symcap_body_dim(const symcap_body* body, int* out) {
  return wrap([&] {
    require(body != nullptr && out != nullptr, "null argument");
    *out = body->ptr->dim();
  });
}

symcap_status symcap_body_gauge(const symcap_body* body, const double* x,
                                size_t n, double* out) {
  return wrap([&] {
    require(body != nullptr && out != nullptr, "null argument");
    *out = symcap::gauge(*body->ptr, as_span(x, n));
  });
}

symcap_status symcap_body_support(const symcap_body* body, const double* v,
                                  size_t n, double* out) {
  return wrap([&] {
    require(body != nullptr && out != nullptr, "null argument");
    *out = symcap::support(*body->ptr, as_span(v, n));
  });
}

symcap_status symcap_body_contains(const symcap_body* body, const double* x,
                                   size_t n, int* out) {
  return wrap([&] {
    require(body != nullptr && out != nullptr, "null argument");
    *out = symcap::contains(*body->ptr, as_span(x, n)) ? 1 : 0;
  });
}

symcap_status symcap_body_volume(const symcap_body* body, double* out) {
  return wrap([&] {
    require(body != nullptr && out != nullptr, "null argument");
    *out = symcap::volume(*body->ptr);
  });
}

symcap_status symcap_body_mahler(const symcap_body* body, double* out) {
  return wrap([&] {
    require(body != nullptr && out != nullptr, "null argument");
    *out = symcap::mahler(*body->ptr);
  });
}

symcap_status symcap_body_mc_volume(const symcap_body* body,
                                    long long samples, uint64_t seed,
                                    int threads, double* out_mean,
                                    double* out_std_error) {
  return wrap([&] {
    require(body != nullptr && out_mean != nullptr && out_std_error != nullptr,
            "null argument");
    const symcap::Body& b = *body->ptr;
    const int dim = b.dim();
    symcap::oracle::BBox box;
    box.lo.resize(dim);
    box.hi.resize(dim);
    std::vector<double> e(dim, 0.0);
    for (int i = 0; i < dim; ++i) {
      e[i] = 1.0;
      const double reach = symcap::support(b, e);
      box.lo[i] = -reach;
      box.hi[i] = reach;
      e[i] = 0.0;
    }
    const auto member = [&b](std::span<const double> x) {
      return symcap::contains(b, x);
    };
    const symcap::MCEstimate est = symcap::oracle::mc_volume(
        member, box, samples, symcap::num::RngStream(seed, 0), threads);
    *out_mean = est.mean;
    *out_std_error = est.std_error;
  });
}

symcap_status symcap_region_dim(const symcap_region* region, int* out) {
  return wrap([&] {
    require(region != nullptr && out != nullptr, "null argument");
    *out = region->ptr->dim();
  });
}

symcap_status symcap_region_volume(const symcap_region* region, double* out) {
  return wrap([&] {
    require(region != nullptr && out != nullptr, "null argument");
    *out = symcap::region_volume(*region->ptr);
  });
}

symcap_status symcap_region_classify(const symcap_region* region,
                                     int* out_convex, int* out_concave) {
  return wrap([&] {
    require(region != nullptr && out_convex != nullptr &&
                out_concave != nullptr,
            "null argument");
    const symcap::Classification c = symcap::classify(*region->ptr);
    *out_convex = c.convex ? 1 : 0;
    *out_concave = c.concave ? 1 : 0;
  });
}

symcap_status symcap_region_capacity(const symcap_region* region,
                                     double* out_value,
                                     char** out_report_json) {
  return wrap([&] {
    require(region != nullptr && out_value != nullptr, "null argument");
    const symcap::CapacityReport report =
        symcap::capacity_convex_toric(*region->ptr);
    *out_value = report.value;
    if (out_report_json != nullptr) {
      *out_report_json = copy_string(symcap::report_to_json(report));
    }
  });
}

symcap_status symcap_region_gromov_width(const symcap_region* region,
                                         double* out_value,
                                         char** out_report_json) {
  return wrap([&] {
    require(region != nullptr && out_value != nullptr, "null argument");
    const symcap::CapacityReport report =
        symcap::gromov_width_concave(*region->ptr);
    *out_value = report.value;
    if (out_report_json != nullptr) {
      *out_report_json = copy_string(symcap::report_to_json(report));
    }
  });
}

symcap_status symcap_region_capacity_bounds(const symcap_region* region,
                                            double* out_lower,
                                            double* out_upper) {
  return wrap([&] {
    require(region != nullptr && out_lower != nullptr && out_upper != nullptr,
            "null argument");
    const symcap::Interval bounds =
        symcap::capacity_bounds_concave(*region->ptr);
    *out_lower = bounds.lower;
    *out_upper = bounds.upper;
  });
}

symcap_status symcap_cube_product_capacity(const symcap_body* body,
                                           double* out_value,
                                           char** out_report_json) {
  return wrap([&] {
    require(body != nullptr && out_value != nullptr, "null argument");
    const symcap::CapacityReport report =
        symcap::capacity_cube_product(body->ptr);
    *out_value = report.value;
    if (out_report_json != nullptr) {
      *out_report_json = copy_string(symcap::report_to_json(report));
    }
  });
}

symcap_status symcap_selfpolar_bound(const symcap_body* body,
                                     char** out_record_json) {
  return wrap([&] {
    require(body != nullptr && out_record_json != nullptr, "null argument");
    const symcap::VerificationRecord record =
        symcap::selfpolar_capacity_bound(body->ptr);
    *out_record_json = copy_string(symcap::record_to_json(record));
  });
}

symcap_status symcap_selfpolar_lp(int n, double p, double* out_value,
                                  char** out_report_json) {
  return wrap([&] {
    require(out_value != nullptr, "null argument");
    const symcap::CapacityReport report = symcap::selfpolar_capacity_lp(n, p);
    *out_value = report.value;
    if (out_report_json != nullptr) {
      *out_report_json = copy_string(symcap::report_to_json(report));
    }
  });
}

symcap_status symcap_xp_capacity(double p, double* out_value,
                                 char** out_report_json) {
  return wrap([&] {
    require(out_value != nullptr, "null argument");
    const symcap::CapacityReport report = symcap::xp_capacity(p);
    *out_value = report.value;
    if (out_report_json != nullptr) {
      *out_report_json = copy_string(symcap::report_to_json(report));
    }
  });
}

symcap_status symcap_xp_curve(double p, double v, double* out_w1,
                              double* out_w2) {
  return wrap([&] {
    require(out_w1 != nullptr && out_w2 != nullptr, "null argument");
    const std::array<double, 2> w = symcap::xp_curve(p, v);
    *out_w1 = w[0];
    *out_w2 = w[1];
  });
}

symcap_status symcap_mahler_lp(int n, double p, double* out) {
  return wrap([&] {
    require(out != nullptr, "null argument");
    *out = symcap::mahler_lp(n, p);
  });
}

symcap_status symcap_mahler_phi(int n, double p, double* out) {
  return wrap([&] {
    require(out != nullptr, "null argument");
    *out = symcap::phi(n, p);
  });
}

symcap_status symcap_mahler_derivative(int n, double p, double* out) {
  return wrap([&] {
    require(out != nullptr, "null argument");
    *out = symcap::mahler_derivative(n, p);
  });
}

symcap_status symcap_verify_run(const char* suite, uint64_t seed, double tol,
                                long long mc_samples, int threads,
                                char** out_records_json,
                                int* out_all_passed) {
  return wrap([&] {
    require(suite != nullptr && out_records_json != nullptr &&
                out_all_passed != nullptr,
            "null argument");
    require(std::isfinite(tol) || tol <= 0.0, "tol must be finite");
    symcap::verify::Options options;
    options.seed = seed;
    if (tol > 0.0) options.tol = tol;
    if (mc_samples > 0) options.mc_samples = mc_samples;
    if (threads > 0) options.threads = threads;
    const std::vector<symcap::VerificationRecord> records =
        symcap::verify::run_suite(suite, options);
    *out_records_json = copy_string(symcap::records_to_json(records));
    *out_all_passed = symcap::verify::all_passed(records) ? 1 : 0;
  });
}

}  // extern "C"
