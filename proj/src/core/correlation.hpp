#pragma once

// Exact high-order inclusion correlations Corr(k) = E prod_{A in H} (1_A - n/N)
// of simple random sampling, their scaled large-N limits, and the coefficient
// table alpha(k, f) that connects the two.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core/exactnum.hpp"

namespace srs {

/// One evaluation of Corr(k) at population size N and sample size n.
struct CorrRecord {
  int k = 0;
  std::int64_t N = 0;
  std::int64_t n = 0;
  Rational f;      // n / N
  Rational corr;
  Rational scaled;  // N^e(k) * corr
  std::optional<Rational> limit;
  std::optional<Rational> abs_error;  // |scaled - limit|, present with limit
};

/// alpha(k, f) = sum_v f^(k-v) sum_r coeffs[v][r] N^r, so that
/// Corr(k) = alpha(k, n/N) / (N)_k.
struct AlphaTable {
  int k = 0;
  std::vector<std::vector<Rational>> coeffs;

  /// sum_r coeffs[v][r] N^r, the coefficient of f^(k-v).
  Rational coefficient(int v, const Rational& N) const;
  Rational alpha(const Rational& f, const Rational& N) const;
  /// alpha(k, n/N) / (N)_k.
  Rational reconstruct_corr(std::int64_t N, std::int64_t n) const;
};

/// The limit value of N^e(k) Corr(k) for a fixed sampling fraction.
struct LimitSpec {
  int k = 0;
  Rational f;
  Rational value;
  int exponent = 0;
};

Rational corr_exact(int k, std::int64_t N, std::int64_t n);

/// (k + k mod 2) / 2
int parity_exponent(int k);

/// Requires k >= 2 and 0 < f < 1.
Rational theorem_limit(int k, const Rational& f);
LimitSpec limit_spec(int k, const Rational& f);

AlphaTable alpha_coefficients(int k);

/// lim N^e(k) * (coefficient of f^(k-v) in Corr(k) viewed as a function of f).
Rational coefficient_limit(int k, int v);

/// Builds the record for (k, N, n). The limit is taken at `limit_f` when given,
/// otherwise at n/N; it is left empty where no limit is defined (f not in
/// (0,1)). Orders 0 and 1 have the trivial limits 1 and 0.
CorrRecord make_record(int k, std::int64_t N, std::int64_t n,
                       const std::optional<Rational>& limit_f = std::nullopt);

struct ScanEntry {
  std::int64_t N = 0;
  std::optional<CorrRecord> record;
  std::string error;  // set when record is empty
};

/// n_N = floor(f N + 1/2) for each N of an ascending grid; the limit is taken
/// at the target f. Bad grid entries are reported in place and the scan goes on.
/// `workers` == 0 picks the hardware concurrency; output never depends on it.
std::vector<ScanEntry> convergence_scan(int k, const Rational& f, std::span<const std::int64_t> grid,
                                        unsigned workers = 0);

/// floor(f N + 1/2)
std::int64_t rounded_sample_size(const Rational& f, std::int64_t N);

}  // namespace srs
