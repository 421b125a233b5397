/* Exercises the C interface from plain C. */
#include <stdio.h>
#include <string.h>

#include "srscorr/srscorr.h"

static int failures = 0;

#define EXPECT(cond)                                                  \
  do {                                                                \
    if (!(cond)) {                                                    \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                     \
    }                                                                 \
  } while (0)

static void expect_string(srscorr_status st, char* s, const char* want) {
  EXPECT(st == SRSCORR_OK);
  if (st == SRSCORR_OK) {
    if (strcmp(s, want) != 0) fprintf(stderr, "got '%s', want '%s'\n", s, want);
    EXPECT(strcmp(s, want) == 0);
    srscorr_string_free(s);
  }
}

int main(void) {
  char* s = NULL;
  int32_t e = 0;
  double mean = 0, se = 0;

  EXPECT(strcmp(srscorr_version(), "1.0.0") == 0);

  srscorr_status st = srscorr_corr_exact(2, 10, 5, &s);
  expect_string(st, s, "-1/36");
  st = srscorr_brute_force_corr(2, 6, 3, &s);
  expect_string(st, s, "-1/20");
  st = srscorr_theorem_limit(4, "1/2", &s);
  expect_string(st, s, "3/16");
  st = srscorr_normal_moment(8, &s);
  expect_string(st, s, "105");
  st = srscorr_p_poly_json(5, 1, &s);
  expect_string(st, s, "[\"10\",\"1/2\",\"-1/2\"]");

  EXPECT(srscorr_parity_exponent(7, &e) == SRSCORR_OK && e == 4);
  EXPECT(srscorr_monte_carlo(1, 10, 4, 20000, 42, &mean, &se) == SRSCORR_OK);
  EXPECT(mean <= 4 * se && -mean <= 4 * se);

  /* error paths */
  EXPECT(srscorr_corr_exact(2, 10, 11, &s) == SRSCORR_ERR_DOMAIN);
  EXPECT(strlen(srscorr_last_error()) > 0);
  EXPECT(srscorr_theorem_limit(4, "0.5", &s) == SRSCORR_ERR_INVALID_ARGUMENT);
  EXPECT(srscorr_theorem_limit(4, "3/2", &s) == SRSCORR_ERR_DOMAIN);
  EXPECT(srscorr_brute_force_corr(2, 40, 20, &s) == SRSCORR_ERR_GUARD);
  EXPECT(srscorr_corr_exact(2, 10, 5, NULL) == SRSCORR_ERR_INVALID_ARGUMENT);
  EXPECT(srscorr_corr_exact(2, 10, 5, &s) == SRSCORR_OK && srscorr_last_error()[0] == '\0');
  srscorr_string_free(s);

  /* reports */
  srscorr_report* r = NULL;
  EXPECT(srscorr_report_create(&r) == SRSCORR_OK);
  char* out = NULL;
  size_t len = 0;
  EXPECT(srscorr_report_emit(r, SRSCORR_FORMAT_CSV, 6, SRSCORR_ROW_LIMIT, &out, &len) == SRSCORR_OK);
  EXPECT(strcmp(out, "k,f,exponent,value,value_decimal\n") == 0 && len == strlen(out));
  srscorr_string_free(out);

  EXPECT(srscorr_report_add_limit(r, 4, "1/2") == SRSCORR_OK);
  EXPECT(srscorr_report_add_corr(r, 2, 10, 5) == SRSCORR_ERR_INVALID_ARGUMENT); /* mixed kinds */
  EXPECT(srscorr_report_size(r) == 1);
  EXPECT(srscorr_report_emit(r, SRSCORR_FORMAT_JSON, 0, SRSCORR_ROW_LIMIT, &out, &len) == SRSCORR_ERR_INVALID_ARGUMENT);
  EXPECT(srscorr_report_emit(r, SRSCORR_FORMAT_JSON, 4, SRSCORR_ROW_LIMIT, &out, &len) == SRSCORR_OK);
  EXPECT(strstr(out, "\"value\":\"3/16\"") != NULL);
  EXPECT(strstr(out, "\"value_decimal\":\"0.1875\"") != NULL);
  srscorr_string_free(out);
  srscorr_report_free(r);

  EXPECT(srscorr_report_create(&r) == SRSCORR_OK);
  {
    const int64_t grid[] = {1, 10, 100};
    size_t failed = 0;
    EXPECT(srscorr_report_add_scan(r, 2, "1/2", grid, 3, &failed) == SRSCORR_OK);
    EXPECT(failed == 1);
    EXPECT(srscorr_report_size(r) == 2);
    EXPECT(srscorr_report_diagnostic_count(r) == 1);
    EXPECT(srscorr_report_diagnostic(r, 0) != NULL);
    EXPECT(srscorr_report_diagnostic(r, 5) == NULL);
  }
  srscorr_report_free(r);

  EXPECT(srscorr_report_create(&r) == SRSCORR_OK);
  {
    size_t bad = 99;
    EXPECT(srscorr_report_add_verify(r, "exactnum", 6, &bad) == SRSCORR_OK);
    EXPECT(bad == 0);
    EXPECT(srscorr_report_size(r) > 0);
    EXPECT(srscorr_report_add_verify(r, "nonsense", 0, &bad) == SRSCORR_ERR_INVALID_ARGUMENT);
  }
  srscorr_report_free(r);
  srscorr_report_free(NULL);

  if (failures) fprintf(stderr, "%d failure(s)\n", failures);
  return failures ? 1 : 0;
}
