#ifndef SRSCORR_SRSCORR_H
#define SRSCORR_SRSCORR_H

/*
 * C interface to the srscorr library: exact high-order inclusion correlations
 * of simple random sampling, their scaled limits, Monte Carlo estimates, and
 * the identity verification suite.
 *
 * Rationals cross the interface as canonical strings "p/q" (or "p" when the
 * denominator is 1). Strings returned through `char** out` are owned by the
 * caller and must be released with srscorr_string_free(). Every function
 * returning srscorr_status stores a message retrievable with
 * srscorr_last_error() on failure; the message is per thread.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SRSCORR_BUILDING)
#    define SRSCORR_API __declspec(dllexport)
#  else
#    define SRSCORR_API __declspec(dllimport)
#  endif
#else
#  define SRSCORR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum srscorr_status {
  SRSCORR_OK = 0,
  SRSCORR_ERR_INVALID_ARGUMENT = 1, /* malformed input, bad flag value, null pointer */
  SRSCORR_ERR_DOMAIN = 2,           /* mathematically invalid request */
  SRSCORR_ERR_GUARD = 3,            /* enumeration size guard exceeded */
  SRSCORR_ERR_INTERNAL = 4
} srscorr_status;

typedef enum srscorr_format {
  SRSCORR_FORMAT_JSON = 0, /* JSON lines */
  SRSCORR_FORMAT_CSV = 1
} srscorr_format;

typedef enum srscorr_row_kind {
  SRSCORR_ROW_CORR = 0,
  SRSCORR_ROW_LIMIT = 1,
  SRSCORR_ROW_MC = 2,
  SRSCORR_ROW_PPOLY = 3,
  SRSCORR_ROW_VERIFY = 4
} srscorr_row_kind;

/* Opaque, ordered collection of report rows of a single kind. */
typedef struct srscorr_report srscorr_report;

SRSCORR_API const char* srscorr_version(void);
SRSCORR_API const char* srscorr_last_error(void);
SRSCORR_API void srscorr_string_free(char* s);

/* Scalar queries. */
SRSCORR_API srscorr_status srscorr_corr_exact(int32_t k, int64_t N, int64_t n, char** out);
SRSCORR_API srscorr_status srscorr_brute_force_corr(int32_t k, int64_t N, int64_t n, char** out);
SRSCORR_API srscorr_status srscorr_theorem_limit(int32_t k, const char* f, char** out);
SRSCORR_API srscorr_status srscorr_normal_moment(int32_t k, char** out);
SRSCORR_API srscorr_status srscorr_parity_exponent(int32_t k, int32_t* out);
/* P_{k,m} as a JSON array of coefficient strings, lowest degree first. */
SRSCORR_API srscorr_status srscorr_p_poly_json(int32_t k, int32_t m, char** out);
SRSCORR_API srscorr_status srscorr_monte_carlo(int32_t k, int64_t N, int64_t n, uint64_t trials, uint64_t seed,
                                               double* mean, double* std_error);

/* Reports. A report takes the kind of its first row; adding a row of another
 * kind fails with SRSCORR_ERR_INVALID_ARGUMENT. */
SRSCORR_API srscorr_status srscorr_report_create(srscorr_report** out);
SRSCORR_API void srscorr_report_free(srscorr_report* report);
SRSCORR_API size_t srscorr_report_size(const srscorr_report* report);

SRSCORR_API srscorr_status srscorr_report_add_corr(srscorr_report* report, int32_t k, int64_t N, int64_t n);
SRSCORR_API srscorr_status srscorr_report_add_limit(srscorr_report* report, int32_t k, const char* f);
/* Adds one row per usable grid entry, in grid order. Entries that cannot be
 * evaluated (n rounds to 0 or N, N < max(2, k)) are skipped, counted in
 * *failed and described in the report diagnostics. grid must be strictly
 * ascending. */
SRSCORR_API srscorr_status srscorr_report_add_scan(srscorr_report* report, int32_t k, const char* f,
                                                   const int64_t* grid, size_t grid_len, size_t* failed);
SRSCORR_API srscorr_status srscorr_report_add_mc(srscorr_report* report, int32_t k, int64_t N, int64_t n,
                                                 uint64_t trials, uint64_t seed);
SRSCORR_API srscorr_status srscorr_report_add_ppoly(srscorr_report* report, int32_t k, int32_t m);
/* suite: "exactnum", "ppoly", "correlation", "oracle" or "all". max_k = 0
 * keeps the default ranges. *failures receives the number of failing rows. */
SRSCORR_API srscorr_status srscorr_report_add_verify(srscorr_report* report, const char* suite, int32_t max_k,
                                                     size_t* failures);

SRSCORR_API size_t srscorr_report_diagnostic_count(const srscorr_report* report);
/* Borrowed pointer, valid until the report is modified or freed. */
SRSCORR_API const char* srscorr_report_diagnostic(const srscorr_report* report, size_t index);

/* Serializes the report. empty_kind selects the CSV header when the report has
 * no rows. precision >= 1 is the number of fractional digits of decimal
 * fields. */
SRSCORR_API srscorr_status srscorr_report_emit(const srscorr_report* report, srscorr_format format,
                                               int32_t precision, srscorr_row_kind empty_kind, char** out,
                                               size_t* out_len);

#ifdef __cplusplus
}
#endif

#endif /* SRSCORR_SRSCORR_H */
