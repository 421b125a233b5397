#include "core/correlation.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "core/ppoly.hpp"

namespace srs {

namespace {

void check_design(int k, std::int64_t N, std::int64_t n) {
  if (N < 1) throw Error(ErrorKind::Domain, "population size N must be >= 1");
  if (n < 0 || n > N) throw Error(ErrorKind::Domain, "sample size n must satisfy 0 <= n <= N");
  if (k < 0 || k > N) throw Error(ErrorKind::Domain, "order k must satisfy 0 <= k <= N");
}

Rational sign_pow(int e) { return Rational(e % 2 ? -1 : 1); }

}  // namespace

Rational corr_exact(int k, std::int64_t N, std::int64_t n) {
  check_design(k, N, n);
  const Rational f(Integer(static_cast<long>(n)), Integer(static_cast<long>(N)));
  const Rational minus_f = -f;
  Rational acc;
  Rational ratio(1);  // (n)_j / (N)_j
  for (int j = 0; j <= k; ++j) {
    if (j > 0) ratio *= Rational(Integer(static_cast<long>(n - j + 1)), Integer(static_cast<long>(N - j + 1)));
    if (ratio.is_zero()) break;
    acc += Rational(binomial(k, j)) * ratio * minus_f.pow(k - j);
  }
  return acc;
}

int parity_exponent(int k) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "parity_exponent: negative order");
  return (k + k % 2) / 2;
}

Rational theorem_limit(int k, const Rational& f) {
  if (k < 2) throw Error(ErrorKind::InvalidArgument, "theorem_limit: order must be >= 2");
  if (f.sign() <= 0 || f >= Rational(1)) throw Error(ErrorKind::Domain, "theorem_limit: f must lie in (0,1)");
  const Rational base = f * (f - Rational(1));
  if (k % 2 == 0) return base.pow(k / 2) * Rational(normal_moment(k));
  return base.pow((k - 1) / 2) * (Rational(2) * f - Rational(1)) * Rational(k - 1, 3) *
         Rational(normal_moment(k + 1));
}

LimitSpec limit_spec(int k, const Rational& f) {
  return LimitSpec{k, f, theorem_limit(k, f), parity_exponent(k)};
}

Rational AlphaTable::coefficient(int v, const Rational& N) const {
  Rational acc;
  const auto& row = coeffs.at(v);
  for (auto it = row.rbegin(); it != row.rend(); ++it) acc = acc * N + *it;
  return acc;
}

Rational AlphaTable::alpha(const Rational& f, const Rational& N) const {
  Rational acc;
  for (int v = 0; v <= k; ++v) acc += f.pow(k - v) * coefficient(v, N);
  return acc;
}

Rational AlphaTable::reconstruct_corr(std::int64_t N, std::int64_t n) const {
  check_design(k, N, n);
  const Rational NN(Integer(static_cast<long>(N)));
  const Rational f(Integer(static_cast<long>(n)), Integer(static_cast<long>(N)));
  return alpha(f, NN) / falling_factorial(NN, k);
}

AlphaTable alpha_coefficients(int k) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "alpha_coefficients: negative order");
  AlphaTable t;
  t.k = k;
  t.coeffs.assign(k + 1, std::vector<Rational>(k + 1));
  // f^-j (fN)_j   = sum_v (-1)^v P0_{j,v}(1) f^-v N^(j-v)
  // (N-j)_{k-j}   = sum_i (-1)^i P0_{k,i}(j) N^(k-j-i)
  // alpha(k, f)   = (-f)^k sum_j C(k,j) (-1)^j [product of the two]
  for (int j = 0; j <= k; ++j) {
    const Rational outer = Rational(binomial(k, j)) * sign_pow(k + j);
    for (int v = 0; v <= j; ++v) {
      const Rational a = p0_eval(j, v, 1);
      if (a.is_zero()) continue;
      for (int i = 0; i <= k - j; ++i) {
        const Rational b = p0_eval(k, i, j);
        if (b.is_zero()) continue;
        t.coeffs[v][k - v - i] += outer * sign_pow(v + i) * a * b;
      }
    }
  }
  return t;
}

Rational coefficient_limit(int k, int v) {
  if (k < 2) throw Error(ErrorKind::InvalidArgument, "coefficient_limit: order must be >= 2");
  if (v < 0 || v > k) throw Error(ErrorKind::InvalidArgument, "coefficient_limit: v must lie in 0..k");
  if (k % 2 == 0) {
    if (v > k / 2) return Rational(0);
    return sign_pow(v) * Rational(normal_moment(k)) * Rational(binomial(k / 2, v));
  }
  const int h = (k + 1) / 2;
  if (v > h) return Rational(0);
  return Rational(2, 3) * sign_pow(v) * Rational((k - 1) * (k + 1 - v), k + 1) *
         Rational(normal_moment(k + 1)) * Rational(binomial(h, v));
}

CorrRecord make_record(int k, std::int64_t N, std::int64_t n, const std::optional<Rational>& limit_f) {
  CorrRecord r;
  r.k = k;
  r.N = N;
  r.n = n;
  r.corr = corr_exact(k, N, n);
  r.f = Rational(Integer(static_cast<long>(n)), Integer(static_cast<long>(N)));
  r.scaled = Rational(Integer(static_cast<long>(N))).pow(parity_exponent(k)) * r.corr;
  const Rational at = limit_f.value_or(r.f);
  if (k == 0) {
    r.limit = Rational(1);
  } else if (k == 1) {
    r.limit = Rational(0);
  } else if (at.sign() > 0 && at < Rational(1)) {
    r.limit = theorem_limit(k, at);
  }
  if (r.limit) r.abs_error = (r.scaled - *r.limit).abs();
  return r;
}

std::int64_t rounded_sample_size(const Rational& f, std::int64_t N) {
  Rational x = f * Rational(Integer(static_cast<long>(N))) + Rational(1, 2);
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
  return q.get_si();
}

std::vector<ScanEntry> convergence_scan(int k, const Rational& f, std::span<const std::int64_t> grid,
                                        unsigned workers) {
  if (k < 2) throw Error(ErrorKind::InvalidArgument, "convergence_scan: order must be >= 2");
  if (f.sign() <= 0 || f >= Rational(1)) throw Error(ErrorKind::Domain, "convergence_scan: f must lie in (0,1)");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (grid[i] <= grid[i - 1]) throw Error(ErrorKind::InvalidArgument, "convergence_scan: grid must be strictly ascending");
  }

  std::vector<ScanEntry> out(grid.size());
  auto evaluate = [&](std::size_t i) {
    ScanEntry& e = out[i];
    e.N = grid[i];
    if (e.N < 2) {
      e.error = "N = " + std::to_string(e.N) + " is below 2";
      return;
    }
    const std::int64_t n = rounded_sample_size(f, e.N);
    if (n <= 0 || n >= e.N) {
      e.error = "N = " + std::to_string(e.N) + " rounds to degenerate sample size n = " + std::to_string(n);
      return;
    }
    if (k > e.N) {
      e.error = "N = " + std::to_string(e.N) + " is smaller than the order k = " + std::to_string(k);
      return;
    }
    try {
      e.record = make_record(k, e.N, n, f);
    } catch (const Error& err) {
      e.error = err.what();
    }
  };

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, grid.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < grid.size(); ++i) evaluate(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < grid.size(); i = next++) evaluate(i);
    });
  }
  pool.clear();
  return out;
}

}  // namespace srs
