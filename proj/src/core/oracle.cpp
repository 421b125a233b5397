#include "core/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

namespace srs {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {
constexpr std::uint64_t rotl(std::uint64_t x, int r) { return (x << r) | (x >> (64 - r)); }
}  // namespace

Xoshiro256::Xoshiro256(std::uint64_t seed) {
  SplitMix64 sm(seed);
  for (auto& s : s_) s = sm.next();
}

std::uint64_t Xoshiro256::next() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

std::uint64_t Xoshiro256::below(std::uint64_t bound) {
  unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<unsigned __int128>(next()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

namespace {

void check_sizes(std::int64_t N, std::int64_t n) {
  if (N < 0) throw Error(ErrorKind::Domain, "population size N must be >= 0");
  if (n < 0 || n > N) throw Error(ErrorKind::Domain, "sample size n must satisfy 0 <= n <= N");
}

Rational fraction(std::int64_t n, std::int64_t N) {
  return Rational(Integer(static_cast<long>(n)), Integer(static_cast<long>(N)));
}

}  // namespace

Rational hypergeom_inclusion_prob(std::int64_t k, std::int64_t N, std::int64_t n) {
  check_sizes(N, n);
  if (k < 0 || k > N) throw Error(ErrorKind::Domain, "hypergeom_inclusion_prob: need 0 <= k <= N");
  if (k > n) return Rational(0);
  return Rational(binomial(N - k, n - k), binomial(N, n));
}

Rational brute_force_corr(int k, std::int64_t N, std::int64_t n) {
  if (k < 0 || k > N) throw Error(ErrorKind::Domain, "brute_force_corr: need 0 <= k <= N");
  std::vector<std::int64_t> H(k);
  std::iota(H.begin(), H.end(), 0);
  return brute_force_corr(H, N, n);
}

Rational brute_force_corr(std::span<const std::int64_t> H, std::int64_t N, std::int64_t n) {
  check_sizes(N, n);
  if (N < 1) throw Error(ErrorKind::Domain, "brute_force_corr: empty population");
  std::vector<char> in_h(N, 0);
  for (auto a : H) {
    if (a < 0 || a >= N || in_h[a]) throw Error(ErrorKind::InvalidArgument, "brute_force_corr: H must hold distinct indices in 0..N-1");
    in_h[a] = 1;
  }
  const Integer total = binomial(N, n);
  if (total > kEnumerationGuard) {
    throw Error(ErrorKind::Guard, "brute_force_corr: C(" + std::to_string(N) + "," + std::to_string(n) +
                                      ") = " + total.get_str() + " exceeds the enumeration guard of 10^7");
  }

  // The product only depends on how many members of H were sampled, so tally
  // that count per subset and combine exactly at the end.
  const auto k = static_cast<std::int64_t>(H.size());
  std::vector<std::uint64_t> tally(k + 1, 0);
  std::vector<std::int64_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::int64_t hits = 0;
    for (auto i : idx) hits += in_h[i];
    ++tally[hits];
    // next combination in lexicographic order
    std::int64_t p = n - 1;
    while (p >= 0 && idx[p] == N - n + p) --p;
    if (p < 0) break;
    ++idx[p];
    for (std::int64_t q = p + 1; q < n; ++q) idx[q] = idx[q - 1] + 1;
  }

  const Rational f = fraction(n, N);
  const Rational in_term = Rational(1) - f;
  const Rational out_term = -f;
  Rational acc;
  for (std::int64_t c = 0; c <= k; ++c) {
    if (tally[c] == 0) continue;
    acc += Rational(Integer(static_cast<unsigned long>(tally[c]))) * in_term.pow(c) * out_term.pow(k - c);
  }
  return acc / Rational(total);
}

SampleSubset sample_srs(std::int64_t N, std::int64_t n, Xoshiro256& rng) {
  check_sizes(N, n);
  std::vector<std::int64_t> perm(N);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::int64_t i = 0; i < n; ++i) {
    auto j = i + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(N - i)));
    std::swap(perm[i], perm[j]);
  }
  perm.resize(n);
  std::sort(perm.begin(), perm.end());
  return SampleSubset{N, std::move(perm)};
}

std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk) {
  SplitMix64 sm(seed ^ (0xd1b54a32d192ed03ULL * (chunk + 1)));
  return sm.next();
}

namespace {

struct Moments {
  std::uint64_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++count;
    const double d = x - mean;
    mean += d / static_cast<double>(count);
    m2 += d * (x - mean);
  }

  // Chan et al. pairwise merge.
  void merge(const Moments& o) {
    if (o.count == 0) return;
    const double na = static_cast<double>(count);
    const double nb = static_cast<double>(o.count);
    const double d = o.mean - mean;
    const double n = na + nb;
    mean += d * nb / n;
    m2 += o.m2 + d * d * na * nb / n;
    count += o.count;
  }
};

}  // namespace

McEstimate monte_carlo_corr(int k, std::int64_t N, std::int64_t n, std::uint64_t trials, std::uint64_t seed,
                            unsigned workers) {
  check_sizes(N, n);
  if (N < 1) throw Error(ErrorKind::Domain, "monte_carlo_corr: empty population");
  if (k < 0 || k > N) throw Error(ErrorKind::Domain, "monte_carlo_corr: need 0 <= k <= N");
  if (trials == 0) throw Error(ErrorKind::InvalidArgument, "monte_carlo_corr: trials must be >= 1");

  const double f = static_cast<double>(n) / static_cast<double>(N);
  std::vector<double> in_pow(k + 1), out_pow(k + 1);
  in_pow[0] = out_pow[0] = 1.0;
  for (int i = 1; i <= k; ++i) {
    in_pow[i] = in_pow[i - 1] * (1.0 - f);
    out_pow[i] = out_pow[i - 1] * (-f);
  }

  const std::uint64_t chunks = (trials + kMcChunkTrials - 1) / kMcChunkTrials;
  std::vector<Moments> per_chunk(chunks);
  auto run_chunk = [&](std::uint64_t c) {
    Xoshiro256 rng(chunk_seed(seed, c));
    const std::uint64_t count = std::min<std::uint64_t>(kMcChunkTrials, trials - c * kMcChunkTrials);
    Moments m;
    for (std::uint64_t t = 0; t < count; ++t) {
      auto s = sample_srs(N, n, rng);
      // members are sorted, so the sampled part of H = {0..k-1} is a prefix
      auto hits = std::lower_bound(s.members.begin(), s.members.end(), k) - s.members.begin();
      m.add(in_pow[hits] * out_pow[k - hits]);
    }
    per_chunk[c] = m;
  };

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, chunks));
  if (workers <= 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::uint64_t c = next++; c < chunks; c = next++) run_chunk(c);
      });
    }
  }

  Moments total;
  for (const auto& m : per_chunk) total.merge(m);
  McEstimate est;
  est.mean = total.mean;
  est.trials = trials;
  est.seed = seed;
  est.std_error = trials > 1 ? std::sqrt(total.m2 / static_cast<double>(trials - 1) / static_cast<double>(trials)) : 0.0;
  return est;
}

}  // namespace srs
