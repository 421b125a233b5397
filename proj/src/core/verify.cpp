#include "core/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace srs {

namespace {

class Check {
 public:
  Check(std::string identity, std::string range) {
    row_.identity = std::move(identity);
    row_.range = std::move(range);
    row_.pass = true;
  }

  template <typename Describe>
  void expect(bool ok, Describe&& describe) {
    ++row_.checked;
    if (!ok && row_.pass) {
      row_.pass = false;
      row_.detail = describe();
    }
  }

  VerifyRow row() const { return row_; }

 private:
  VerifyRow row_;
};

struct Bounds {
  int max_k = 0;
  int operator()(int b) const { return max_k > 0 ? std::min(b, max_k) : b; }
};

std::string neq(const Rational& a, const Rational& b) { return a.str() + " != " + b.str(); }

Rational sign_pow(long e) { return Rational(e % 2 ? -1 : 1); }

const std::vector<Rational>& half_integer_betas() {
  static const std::vector<Rational> betas{Rational(1, 2), Rational(1), Rational(3, 2), Rational(2), Rational(3)};
  return betas;
}

// ---------------------------------------------------------------- exactnum

void exactnum_checks(const Bounds& cap, std::vector<VerifyRow>& out) {
  {
    const int top = cap(14);
    Check c("stirling2_alternating_sum", "0<=m,k<=" + std::to_string(top));
    for (long m = 0; m <= top; ++m) {
      for (long k = 0; k <= top; ++k) {
        Integer lhs;
        for (long j = 0; j <= k; ++j) {
          Integer p;
          mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(m));
          lhs += (j % 2 ? -1 : 1) * binomial(k, j) * p;
        }
        Integer rhs = (k % 2 ? -1 : 1) * factorial(k) * stirling_second(m, k);
        c.expect(lhs == rhs, [&] { return "m=" + std::to_string(m) + " k=" + std::to_string(k); });
      }
    }
    out.push_back(c.row());
  }
  {
    const int top = cap(12);
    Check unity("unit_step_sum", "1<=m<=" + std::to_string(top));
    Check delta("kronecker_sum", "1<=m<=" + std::to_string(top));
    for (long m = 1; m <= top; ++m) {
      Integer a, b;
      for (long n = 0; n <= m - 1; ++n) {
        a += (n % 2 ? -1 : 1) * binomial(m, n + 1);
        b += (n % 2 ? -1 : 1) * binomial(m - 1, n);
      }
      unity.expect(a == detail::unit_step(m - 1), [&] { return "m=" + std::to_string(m); });
      delta.expect(b == detail::kronecker(m - 1), [&] { return "m=" + std::to_string(m); });
    }
    out.push_back(unity.row());
    out.push_back(delta.row());
  }
  {
    const int top = cap(12);
    const std::string range = "1<=m<=" + std::to_string(top) + ", beta in {1/2,1,3/2,2,3}";
    Check gamma_sum("gamma_ratio_sum", range);
    Check weighted("weighted_gamma_ratio_sum", range);
    for (long m = 1; m <= top; ++m) {
      for (const auto& beta : half_integer_betas()) {
        Rational plain, with_n;
        for (long n = 0; n <= m - 1; ++n) {
          Rational t = sign_pow(n) * Rational(binomial(m - 1, n)) / (Rational(n) + beta);
          plain += t;
          with_n += t * Rational(n);
        }
        Rational ratio = gamma_ratio(m, *HalfInteger::from_rational(beta));
        gamma_sum.expect(plain == ratio * Rational(detail::unit_step(m - 1)),
                         [&] { return "m=" + std::to_string(m) + " beta=" + beta.str() + ": " + neq(plain, ratio); });
        Rational closed = Rational(detail::kronecker(m - 1)) - beta * ratio * Rational(detail::unit_step(m - 1));
        weighted.expect(with_n == closed,
                        [&] { return "m=" + std::to_string(m) + " beta=" + beta.str() + ": " + neq(with_n, closed); });
      }
    }
    out.push_back(gamma_sum.row());
    out.push_back(weighted.row());
  }
  {
    const int top = cap(12);
    Check c("alternating_fraction_sum", "1<=m<=" + std::to_string(top) + ", beta/gamma in {1/2,1,3/2,2,3}");
    for (long m = 1; m <= top; ++m) {
      // the instances used to evaluate P_{k,m} plus a few generic ones
      const std::vector<std::array<Rational, 3>> params{
          {Rational(2 * (3 - 2 * m)), Rational(1 - 2 * m), Rational(2)},
          {Rational(2), Rational(-3), Rational(2)},
          {Rational(2), Rational(1 - 2 * m), Rational(1)},
          {Rational(1), Rational(0), Rational(1)},
          {Rational(-3, 2), Rational(5, 7), Rational(-3)},
      };
      for (const auto& [alpha, delta, gamma] : params) {
        for (const auto& b : half_integer_betas()) {
          const Rational beta = b * gamma;
          Rational direct;
          for (long n = 0; n <= m - 1; ++n) {
            direct += sign_pow(n) * Rational(binomial(m - 1, n)) * (alpha * Rational(n) + delta) /
                      (gamma * Rational(n) + beta);
          }
          Rational closed = alternating_fraction_sum(m, alpha, delta, gamma, beta);
          c.expect(direct == closed, [&] {
            return "m=" + std::to_string(m) + " alpha=" + alpha.str() + " delta=" + delta.str() +
                   " gamma=" + gamma.str() + " beta=" + beta.str() + ": " + neq(direct, closed);
          });
        }
      }
    }
    out.push_back(c.row());
  }
  {
    const int top_m = cap(12);
    Check sums("faulhaber_power_sum", "0<=m<=" + std::to_string(top_m) + ", 1<=k<=50");
    Check lead("faulhaber_leading_coefficients", "1<=m<=" + std::to_string(top_m));
    for (long m = 0; m <= top_m; ++m) {
      Integer direct;
      for (long k = 1; k <= 50; ++k) {
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(k - 1), static_cast<unsigned long>(m));
        direct += p;
        Rational s = sum_of_powers(k, m);
        sums.expect(s == Rational(direct), [&] { return "k=" + std::to_string(k) + " m=" + std::to_string(m); });
      }
      if (m >= 1) {
        auto c = faulhaber_coefficients(m);
        lead.expect(c[m + 1] == Rational(1, m + 1) && c[m] == Rational(-1, 2),
                    [&] { return "m=" + std::to_string(m) + ": " + c[m + 1].str() + ", " + c[m].str(); });
      }
    }
    out.push_back(sums.row());
    out.push_back(lead.row());
  }
  {
    const int top = cap(30);
    Check c("bernoulli_recurrence", "0<=m<=" + std::to_string(top));
    for (long m = 0; m <= top; ++m) {
      Rational acc;
      for (long j = 0; j <= m; ++j) acc += Rational(binomial(m + 1, j)) * bernoulli(j);
      c.expect(acc == Rational(detail::kronecker(m)), [&] { return "m=" + std::to_string(m); });
    }
    out.push_back(c.row());
  }
  {
    const int top = cap(30);
    Check c("normal_moment_odd_product", "0<=k<=" + std::to_string(top));
    for (long k = 0; k <= top; ++k) {
      Integer expect = 0;
      if (k % 2 == 0) {
        expect = 1;
        for (long j = 1; j < k; j += 2) expect *= j;
      }
      c.expect(normal_moment(k) == expect, [&] { return "k=" + std::to_string(k); });
    }
    out.push_back(c.row());
  }
  {
    const int top = cap(10);
    Check c("falling_factorial_stirling1", "0<=j<=" + std::to_string(top));
    Poly product = Poly::constant(Rational(1));
    for (long j = 0; j <= top; ++j) {
      if (j > 0) product = product * Poly({Rational(-(j - 1)), Rational(1)});
      std::vector<Rational> coeffs(j + 1);
      for (long v = 0; v <= j; ++v) coeffs[v] = sign_pow(j - v) * Rational(stirling_first_unsigned(j, v));
      c.expect(product == Poly(coeffs), [&] { return "j=" + std::to_string(j); });
    }
    out.push_back(c.row());
  }
}

// ---------------------------------------------------------------- ppoly

void ppoly_checks(const Bounds& cap, std::vector<VerifyRow>& out) {
  {
    const int top = cap(18);
    Check c("p_poly_vanishing", "k<=" + std::to_string(top) + ", m<=k, k-m+1<=j<=k");
    for (int k = 0; k <= top; ++k)
      for (int m = 0; m <= k; ++m) {
        Poly p = p_poly(k, m);
        for (int j = std::max(0, k - m + 1); j <= k; ++j)
          c.expect(p(Rational(j)).is_zero(), [&] { return "k=" + std::to_string(k) + " m=" + std::to_string(m) + " j=" + std::to_string(j); });
      }
    out.push_back(c.row());
  }
  {
    const int top = cap(14);
    Check c("p0_matches_p_poly", "k<=" + std::to_string(top) + ", m<=k, 0<=j<=k");
    for (int k = 0; k <= top; ++k)
      for (int m = 0; m <= k; ++m) {
        Poly p = p_poly(k, m);
        for (int j = 0; j <= k; ++j) {
          Rational a = p0_eval(k, m, j), b = p(Rational(j));
          c.expect(a == b, [&] { return "k=" + std::to_string(k) + " m=" + std::to_string(m) + " j=" + std::to_string(j) + ": " + neq(a, b); });
        }
      }
    out.push_back(c.row());
  }
  {
    const int top = cap(12);
    Check c("p_poly_leading_coefficients", "1<=m<=k<=" + std::to_string(top));
    for (int k = 1; k <= top; ++k)
      for (int m = 1; m <= k; ++m) {
        Poly p = p_poly(k, m);
        const Rational denom = Rational(Integer(Integer(1) << m) * factorial(m));
        const Rational top_c = sign_pow(m) / denom;
        const Rational next_c = sign_pow(m) * Rational(m * (2 * m - 5), 3) / denom;
        c.expect(p.degree() == 2 * m && p.coeff(2 * m) == top_c && p.coeff(2 * m - 1) == next_c, [&] {
          return "k=" + std::to_string(k) + " m=" + std::to_string(m) + ": degree " + std::to_string(p.degree()) +
                 ", " + p.coeff(2 * m).str() + ", " + p.coeff(2 * m - 1).str();
        });
      }
    out.push_back(c.row());
  }
  {
    const int top = cap(12);
    Check c("p_at_one_point_form", "1<=v<=" + std::to_string(top) + ", j=v..3v+2");
    for (int v = 1; v <= top; ++v) {
      const Rational denom = Rational(Integer(Integer(1) << v) * factorial(v));
      std::vector<Rational> diff;
      for (int j = v; j <= 3 * v + 2; ++j) {
        Rational J(j);
        Rational main = (J.pow(2 * v) - Rational(v * (2 * v + 1), 3) * J.pow(2 * v - 1)) / denom;
        diff.push_back(p0_eval(j, v, 1) - main);
      }
      // degree <= 2v-2 iff every forward difference of order 2v-1 vanishes
      for (int order = 0; order < 2 * v - 1; ++order)
        for (std::size_t i = 0; i + 1 < diff.size() - order; ++i) diff[i] = diff[i + 1] - diff[i];
      const std::size_t left = diff.size() - (2 * v - 1);
      bool ok = std::all_of(diff.begin(), diff.begin() + left, [](const Rational& r) { return r.is_zero(); });
      c.expect(ok, [&] { return "v=" + std::to_string(v); });
    }
    out.push_back(c.row());
  }
  {
    const int top = cap(10);
    Check c("elementary_sums_match_p0", "0<=v<=j<=" + std::to_string(top) + ", 0<=k<=j, a_{j-1,v}(k)");
    for (int j = 0; j <= top; ++j)
      for (int v = 0; v <= j; ++v)
        for (int k = 0; k <= j; ++k) {
          Rational a = elementary_sum_oracle(j - 1, v, k), b = p0_eval(j, v, k);
          c.expect(a == b, [&] { return "j=" + std::to_string(j) + " v=" + std::to_string(v) + " k=" + std::to_string(k) + ": " + neq(a, b); });
        }
    out.push_back(c.row());
  }
  {
    const int top = cap(12);
    Check expand("falling_factorial_via_p0", "0<=k<=j<=" + std::to_string(top) + ", 20 rational x");
    Check equal("p0_at_zero_equals_at_one", "0<=v<=j<=" + std::to_string(top));
    std::vector<Rational> xs;
    for (int i = 0; i < 20; ++i) xs.push_back(Rational(3 * i - 17, 1 + (i % 7)));
    for (int j = 0; j <= top; ++j) {
      for (int k = 0; k <= j; ++k)
        for (const auto& x : xs) {
          Rational a = falling_factorial_via_p0(j, k, x), b = falling_factorial(x - Rational(k), j - k);
          expand.expect(a == b, [&] { return "j=" + std::to_string(j) + " k=" + std::to_string(k) + " x=" + x.str(); });
        }
      for (int v = 0; v <= j; ++v)
        equal.expect(p0_eval(j, v, 0) == p0_eval(j, v, 1), [&] { return "j=" + std::to_string(j) + " v=" + std::to_string(v); });
    }
    out.push_back(expand.row());
    out.push_back(equal.row());
  }
  {
    const int top = cap(8);
    Check c("weighted_prefix_sum", "q_poly = (x+c)^d, d<=" + std::to_string(top) + ", 1<=j<=20");
    for (int d = 0; d <= top; ++d) {
      Poly q = Poly::constant(Rational(1));
      for (int i = 0; i < d; ++i) q = q * Poly({Rational(-2, 3), Rational(1)});
      Poly s = weighted_prefix_poly(q);
      Rational direct;
      for (int j = 1; j <= 20; ++j) {
        if (j >= 2) direct += Rational(j - 1) * q(Rational(j));
        c.expect(s(Rational(j)) == direct, [&] { return "d=" + std::to_string(d) + " j=" + std::to_string(j); });
      }
    }
    out.push_back(c.row());
  }
}

// ---------------------------------------------------------------- correlation

Poly limit_polynomial(int k) {
  // [f(f-1)]^floor(k/2) times EZ^k (even) or (2f-1)(k-1)/3 EZ^(k+1) (odd)
  Poly base = Poly::constant(Rational(1));
  const Poly ff({Rational(0), Rational(-1), Rational(1)});
  for (int i = 0; i < k / 2; ++i) base = base * ff;
  if (k % 2 == 0) return base * Rational(normal_moment(k));
  return base * Poly({Rational(-1), Rational(2)}) * (Rational(k - 1, 3) * Rational(normal_moment(k + 1)));
}

void correlation_checks(const Bounds& cap, std::vector<VerifyRow>& out) {
  {
    const int top_k = cap(8);
    Check c("corr_matches_enumeration", "N<=14, 1<=n<=N-1, 0<=k<=min(n+2," + std::to_string(top_k) + ")");
    for (std::int64_t N = 2; N <= 14; ++N)
      for (std::int64_t n = 1; n <= N - 1; ++n)
        for (int k = 0; k <= std::min<std::int64_t>({n + 2, top_k, N}); ++k) {
          Rational a = corr_exact(k, N, n), b = brute_force_corr(k, N, n);
          c.expect(a == b, [&] { return "k=" + std::to_string(k) + " N=" + std::to_string(N) + " n=" + std::to_string(n) + ": " + neq(a, b); });
        }
    out.push_back(c.row());
  }
  {
    Check c("corr2_closed_form", "1<=N<=100, 0<=n<=N");
    for (std::int64_t N = 2; N <= 100; ++N)
      for (std::int64_t n = 0; n <= N; ++n) {
        Rational closed(Integer(static_cast<long>(-n * (N - n))), Integer(static_cast<long>(N * N * (N - 1))));
        c.expect(corr_exact(2, N, n) == closed, [&] { return "N=" + std::to_string(N) + " n=" + std::to_string(n); });
      }
    out.push_back(c.row());
  }
  {
    const int top_k = cap(8);
    Check c("alpha_table_reconstruction", "k<=" + std::to_string(top_k) + ", max(2,k)<=N<=40, 1<=n<=N-1");
    for (int k = 0; k <= top_k; ++k) {
      AlphaTable t = alpha_coefficients(k);
      for (std::int64_t N = std::max(2, k); N <= 40; ++N)
        for (std::int64_t n = 1; n <= N - 1; ++n) {
          Rational a = t.reconstruct_corr(N, n), b = corr_exact(k, N, n);
          c.expect(a == b, [&] { return "k=" + std::to_string(k) + " N=" + std::to_string(N) + " n=" + std::to_string(n) + ": " + neq(a, b); });
        }
    }
    out.push_back(c.row());
  }
  {
    const int top_k = cap(9);
    Check c("coefficient_limits_sum_to_limit", "2<=k<=" + std::to_string(top_k));
    for (int k = 2; k <= top_k; ++k) {
      std::vector<Rational> coeffs(k + 1);
      for (int v = 0; v <= k; ++v) coeffs[k - v] = coefficient_limit(k, v);
      c.expect(Poly(coeffs) == limit_polynomial(k), [&] { return "k=" + std::to_string(k); });
    }
    out.push_back(c.row());
  }
  {
    const int top_k = cap(6);
    Check c("coefficient_convergence_rate", "2<=k<=" + std::to_string(top_k) + ", v<=e(k), N in {10^3,10^4}, ratio in [5,20]");
    for (int k = 2; k <= top_k; ++k) {
      AlphaTable t = alpha_coefficients(k);
      const int e = parity_exponent(k);
      for (int v = 0; v <= e; ++v) {
        auto err = [&](long N) {
          Rational NN(N);
          return (NN.pow(e) * t.coefficient(v, NN) / falling_factorial(NN, k) - coefficient_limit(k, v)).abs();
        };
        Rational e3 = err(1000), e4 = err(10000);
        bool ok = !e4.is_zero() && e3 / e4 >= Rational(5) && e3 / e4 <= Rational(20);
        c.expect(ok, [&] { return "k=" + std::to_string(k) + " v=" + std::to_string(v) + ": errors " + e3.decimal(12) + ", " + e4.decimal(12); });
      }
    }
    out.push_back(c.row());
  }
  {
    const int top_k = cap(8);
    Check c("parity_scaling_bounded", "2<=k<=" + std::to_string(top_k) + ", f=2/5, N=2^9..2^14, max/min<10");
    const Rational f(2, 5);
    for (int k = 2; k <= top_k; ++k) {
      Rational lo, hi;
      bool first = true;
      for (int p = 9; p <= 14; ++p) {
        std::int64_t N = std::int64_t{1} << p;
        Rational s = make_record(k, N, rounded_sample_size(f, N), f).scaled.abs();
        if (first || s < lo) lo = s;
        if (first || s > hi) hi = s;
        first = false;
      }
      c.expect(!lo.is_zero() && hi / lo < Rational(10), [&] { return "k=" + std::to_string(k); });
    }
    out.push_back(c.row());
  }
  {
    const int top_k = cap(6);
    Check c("complement_symmetry", "k<=" + std::to_string(top_k) + ", N<=12");
    for (std::int64_t N = 1; N <= 12; ++N)
      for (std::int64_t n = 0; n <= N; ++n)
        for (int k = 0; k <= std::min<std::int64_t>(top_k, N); ++k)
          c.expect(corr_exact(k, N, n) == sign_pow(k) * corr_exact(k, N, N - n),
                   [&] { return "k=" + std::to_string(k) + " N=" + std::to_string(N) + " n=" + std::to_string(n); });
    out.push_back(c.row());
  }
  {
    const int top_k = cap(9);
    Check c("limit_table", "2<=k<=" + std::to_string(top_k) + ", f in {1/10,1/3,1/2,9/10}");
    const std::map<int, long> constants{{2, 1}, {3, 2}, {4, 3}, {5, 20}, {6, 15}, {7, 210}, {8, 105}, {9, 2520}};
    for (int k = 2; k <= top_k; ++k) {
      for (const auto& f : {Rational(1, 10), Rational(1, 3), Rational(1, 2), Rational(9, 10)}) {
        Rational expect = Rational(constants.at(k)) * (f * (f - Rational(1))).pow(k / 2);
        if (k % 2) expect *= Rational(2) * f - Rational(1);
        c.expect(theorem_limit(k, f) == expect, [&] { return "k=" + std::to_string(k) + " f=" + f.str(); });
      }
    }
    out.push_back(c.row());
  }
}

// ---------------------------------------------------------------- oracle

void oracle_checks(const Bounds& cap, std::vector<VerifyRow>& out) {
  const int top_k = cap(12);
  {
    Check c("enumeration_matches_inclusion_expansion", "1<=N<=12, 0<=n<=N, 0<=k<=min(N," + std::to_string(top_k) + ")");
    for (std::int64_t N = 1; N <= 12; ++N)
      for (std::int64_t n = 0; n <= N; ++n) {
        const Rational f(Integer(static_cast<long>(n)), Integer(static_cast<long>(N)));
        for (int k = 0; k <= std::min<std::int64_t>(N, top_k); ++k) {
          Rational expansion;
          for (int j = 0; j <= k; ++j)
            expansion += Rational(binomial(k, j)) * hypergeom_inclusion_prob(j, N, n) * (-f).pow(k - j);
          c.expect(expansion == brute_force_corr(k, N, n),
                   [&] { return "k=" + std::to_string(k) + " N=" + std::to_string(N) + " n=" + std::to_string(n); });
        }
      }
    out.push_back(c.row());
  }
  {
    Check c("exchangeability", "2<=N<=10, 1<=n<=N-1, 1<=k<=min(N," + std::to_string(cap(6)) + "), 5 random H");
    Xoshiro256 rng(7);
    for (std::int64_t N = 2; N <= 10; ++N)
      for (std::int64_t n = 1; n <= N - 1; ++n)
        for (int k = 1; k <= std::min<std::int64_t>(N, cap(6)); ++k) {
          const Rational base = brute_force_corr(k, N, n);
          for (int rep = 0; rep < 5; ++rep) {
            auto H = sample_srs(N, k, rng).members;
            c.expect(brute_force_corr(H, N, n) == base,
                     [&] { return "k=" + std::to_string(k) + " N=" + std::to_string(N) + " n=" + std::to_string(n); });
          }
        }
    out.push_back(c.row());
  }
  {
    Check c("sample_uniformity", "(N,n) in {(4,2),(5,2),(6,3)}, 2*10^5 draws, 5 sigma");
    for (auto [N, n] : {std::pair<int, int>{4, 2}, {5, 2}, {6, 3}}) {
      Xoshiro256 rng(12345 + N);
      const std::uint64_t draws = 200000;
      std::map<std::vector<std::int64_t>, std::uint64_t> freq;
      for (std::uint64_t t = 0; t < draws; ++t) ++freq[sample_srs(N, n, rng).members];
      const double p = 1.0 / binomial(N, n).get_d();
      const double sigma = std::sqrt(draws * p * (1 - p));
      c.expect(freq.size() == binomial(N, n).get_ui(), [&] { return "missing subsets"; });
      for (const auto& [subset, count] : freq) {
        c.expect(std::abs(static_cast<double>(count) - draws * p) <= 5 * sigma,
                 [&] { return "N=" + std::to_string(N) + " n=" + std::to_string(n) + " count " + std::to_string(count); });
      }
    }
    out.push_back(c.row());
  }
  {
    Check c("monte_carlo_deterministic", "k=3 N=100 n=37, 2*10^5 trials, 1 vs 4 workers");
    McEstimate a = monte_carlo_corr(3, 100, 37, 200000, 42, 1);
    McEstimate b = monte_carlo_corr(3, 100, 37, 200000, 42, 4);
    McEstimate again = monte_carlo_corr(3, 100, 37, 200000, 42, 1);
    c.expect(a.mean == b.mean && a.std_error == b.std_error && a.mean == again.mean && a.std_error == again.std_error,
             [] { return "estimates differ"; });
    out.push_back(c.row());
  }
}

}  // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names{"exactnum", "ppoly", "correlation", "oracle"};
  return names;
}

std::vector<VerifyRow> run_verify(const std::string& suite, int max_k) {
  if (max_k < 0) throw Error(ErrorKind::InvalidArgument, "max-k must be >= 0");
  const Bounds cap{max_k};
  std::vector<VerifyRow> out;
  const bool all = suite == "all";
  if (!all && std::find(verify_suites().begin(), verify_suites().end(), suite) == verify_suites().end())
    throw Error(ErrorKind::InvalidArgument, "unknown verify suite '" + suite + "'");
  if (all || suite == "exactnum") exactnum_checks(cap, out);
  if (all || suite == "ppoly") ppoly_checks(cap, out);
  if (all || suite == "correlation") correlation_checks(cap, out);
  if (all || suite == "oracle") oracle_checks(cap, out);
  return out;
}

}  // namespace srs
