#include "srscorr/srscorr.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "core/correlation.hpp"
#include "core/oracle.hpp"
#include "core/ppoly.hpp"
#include "core/report.hpp"
#include "core/verify.hpp"

struct srscorr_report {
  std::vector<srs::ReportRow> rows;
  std::vector<std::string> diagnostics;
};

namespace {

thread_local std::string g_last_error;

srscorr_status fail(srscorr_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

srscorr_status to_status(const srs::Error& e) {
  switch (e.kind()) {
    case srs::ErrorKind::InvalidArgument: return SRSCORR_ERR_INVALID_ARGUMENT;
    case srs::ErrorKind::Domain: return SRSCORR_ERR_DOMAIN;
    case srs::ErrorKind::Guard: return SRSCORR_ERR_GUARD;
  }
  return SRSCORR_ERR_INTERNAL;
}

// Runs body, translating exceptions into status codes.
template <typename Body>
srscorr_status guarded(Body&& body) {
  try {
    g_last_error.clear();
    body();
    return SRSCORR_OK;
  } catch (const srs::Error& e) {
    return fail(to_status(e), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SRSCORR_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SRSCORR_ERR_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.data(), s.size() + 1);
  return p;
}

void require(bool ok, const char* what) {
  if (!ok) throw srs::Error(srs::ErrorKind::InvalidArgument, what);
}

void append(srscorr_report* report, srs::ReportRow row) {
  if (!report->rows.empty() && srs::kind_of(report->rows.front()) != srs::kind_of(row))
    throw srs::Error(srs::ErrorKind::InvalidArgument, "report already holds rows of another kind");
  report->rows.push_back(std::move(row));
}

}  // namespace

extern "C" {

const char* srscorr_version(void) { return "1.0.0"; }

const char* srscorr_last_error(void) { return g_last_error.c_str(); }

void srscorr_string_free(char* s) { std::free(s); }

srscorr_status srscorr_corr_exact(int32_t k, int64_t N, int64_t n, char** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = dup_string(srs::corr_exact(k, N, n).str());
  });
}

srscorr_status srscorr_brute_force_corr(int32_t k, int64_t N, int64_t n, char** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = dup_string(srs::brute_force_corr(k, N, n).str());
  });
}

srscorr_status srscorr_theorem_limit(int32_t k, const char* f, char** out) {
  return guarded([&] {
    require(out != nullptr && f != nullptr, "null pointer argument");
    *out = dup_string(srs::theorem_limit(k, srs::Rational::parse(f)).str());
  });
}

srscorr_status srscorr_normal_moment(int32_t k, char** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = dup_string(srs::normal_moment(k).get_str());
  });
}

srscorr_status srscorr_parity_exponent(int32_t k, int32_t* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = srs::parity_exponent(k);
  });
}

srscorr_status srscorr_p_poly_json(int32_t k, int32_t m, char** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = dup_string(srs::p_poly(k, m).to_json());
  });
}

srscorr_status srscorr_monte_carlo(int32_t k, int64_t N, int64_t n, uint64_t trials, uint64_t seed, double* mean,
                                   double* std_error) {
  return guarded([&] {
    require(mean != nullptr && std_error != nullptr, "null output pointer");
    auto est = srs::monte_carlo_corr(k, N, n, trials, seed);
    *mean = est.mean;
    *std_error = est.std_error;
  });
}

srscorr_status srscorr_report_create(srscorr_report** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = new srscorr_report();
  });
}

void srscorr_report_free(srscorr_report* report) { delete report; }

size_t srscorr_report_size(const srscorr_report* report) { return report ? report->rows.size() : 0; }

srscorr_status srscorr_report_add_corr(srscorr_report* report, int32_t k, int64_t N, int64_t n) {
  return guarded([&] {
    require(report != nullptr, "null report");
    append(report, srs::make_record(k, N, n));
  });
}

srscorr_status srscorr_report_add_limit(srscorr_report* report, int32_t k, const char* f) {
  return guarded([&] {
    require(report != nullptr && f != nullptr, "null pointer argument");
    append(report, srs::limit_spec(k, srs::Rational::parse(f)));
  });
}

srscorr_status srscorr_report_add_scan(srscorr_report* report, int32_t k, const char* f, const int64_t* grid,
                                       size_t grid_len, size_t* failed) {
  return guarded([&] {
    require(report != nullptr && f != nullptr && (grid != nullptr || grid_len == 0), "null pointer argument");
    auto entries = srs::convergence_scan(k, srs::Rational::parse(f), std::span<const std::int64_t>(grid, grid_len));
    size_t bad = 0;
    for (auto& e : entries) {
      if (e.record) {
        append(report, std::move(*e.record));
      } else {
        ++bad;
        report->diagnostics.push_back(e.error);
      }
    }
    if (failed) *failed = bad;
  });
}

srscorr_status srscorr_report_add_mc(srscorr_report* report, int32_t k, int64_t N, int64_t n, uint64_t trials,
                                     uint64_t seed) {
  return guarded([&] {
    require(report != nullptr, "null report");
    append(report, srs::McRow{k, N, n, srs::monte_carlo_corr(k, N, n, trials, seed)});
  });
}

srscorr_status srscorr_report_add_ppoly(srscorr_report* report, int32_t k, int32_t m) {
  return guarded([&] {
    require(report != nullptr, "null report");
    append(report, srs::PPolyRow{k, m, srs::p_poly(k, m)});
  });
}

srscorr_status srscorr_report_add_verify(srscorr_report* report, const char* suite, int32_t max_k, size_t* failures) {
  return guarded([&] {
    require(report != nullptr && suite != nullptr, "null pointer argument");
    size_t bad = 0;
    for (auto& row : srs::run_verify(suite, max_k)) {
      if (!row.pass) {
        ++bad;
        report->diagnostics.push_back(row.identity + ": " + row.detail);
      }
      append(report, std::move(row));
    }
    if (failures) *failures = bad;
  });
}

size_t srscorr_report_diagnostic_count(const srscorr_report* report) {
  return report ? report->diagnostics.size() : 0;
}

const char* srscorr_report_diagnostic(const srscorr_report* report, size_t index) {
  if (!report || index >= report->diagnostics.size()) return nullptr;
  return report->diagnostics[index].c_str();
}

srscorr_status srscorr_report_emit(const srscorr_report* report, srscorr_format format, int32_t precision,
                                   srscorr_row_kind empty_kind, char** out, size_t* out_len) {
  return guarded([&] {
    require(report != nullptr && out != nullptr, "null pointer argument");
    require(format == SRSCORR_FORMAT_JSON || format == SRSCORR_FORMAT_CSV, "unsupported format");
    require(empty_kind >= SRSCORR_ROW_CORR && empty_kind <= SRSCORR_ROW_VERIFY, "unknown row kind");
    std::string text = srs::emit_report(report->rows, format == SRSCORR_FORMAT_JSON ? srs::Format::Json : srs::Format::Csv,
                                        precision, static_cast<srs::RowKind>(empty_kind));
    *out = dup_string(text);
    if (out_len) *out_len = text.size();
  });
}

}  // extern "C"
