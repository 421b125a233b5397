#pragma once

// Independent ground truth for the correlation formulas: exhaustive enumeration
// of simple random samples, the hypergeometric inclusion probability, and a
// seeded Monte Carlo estimator.

#include <cstdint>
#include <span>
#include <vector>

#include "core/exactnum.hpp"

namespace srs {

/// SplitMix64. Only used to expand seeds.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();

 private:
  std::uint64_t state_;
};

/// xoshiro256** 1.0, state filled from SplitMix64(seed).
/// This is the only generator used for sampling, so a seed reproduces the same
/// stream on every platform.
class Xoshiro256 {
 public:
  explicit Xoshiro256(std::uint64_t seed);
  std::uint64_t next();
  /// Uniform integer in [0, bound) by Lemire's multiply-and-reject method: one
  /// draw, plus a redraw with probability below bound / 2^64.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t s_[4];
};

struct SampleSubset {
  std::int64_t N = 0;
  std::vector<std::int64_t> members;  // strictly increasing
  std::int64_t n() const { return static_cast<std::int64_t>(members.size()); }
};

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

inline constexpr std::uint64_t kEnumerationGuard = 10'000'000;
inline constexpr std::uint64_t kMcChunkTrials = 1u << 16;

/// P(every member of a fixed k-set is sampled) = C(N-k, n-k) / C(N, n).
Rational hypergeom_inclusion_prob(std::int64_t k, std::int64_t N, std::int64_t n);

/// E prod_{A in H}(1_A - n/N) by visiting every n-subset of {0..N-1}; H = {0..k-1}.
Rational brute_force_corr(int k, std::int64_t N, std::int64_t n);
/// Same with an explicit H (distinct indices in 0..N-1).
Rational brute_force_corr(std::span<const std::int64_t> H, std::int64_t N, std::int64_t n);

/// Partial Fisher-Yates shuffle of 0..N-1: for i in [0, n) swap position i with
/// i + below(N - i), then sort the first n entries. Uses n calls to below().
SampleSubset sample_srs(std::int64_t N, std::int64_t n, Xoshiro256& rng);

/// Trials are split into chunks of kMcChunkTrials; chunk c draws from
/// Xoshiro256(chunk_seed(seed, c)) and chunk statistics are merged in chunk
/// order, so the result is independent of `workers` (0 = hardware concurrency).
McEstimate monte_carlo_corr(int k, std::int64_t N, std::int64_t n, std::uint64_t trials, std::uint64_t seed,
                            unsigned workers = 0);

std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk);

}  // namespace srs
