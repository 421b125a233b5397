#include "doctest.h"

#include <vector>

#include "core/correlation.hpp"
#include "core/exactnum.hpp"

using srs::Rational;

namespace {

Rational r(long v) { return Rational(v); }

// E prod (1_A - f) expanded over subsets of H: sum_j C(k,j) P(j given members sampled) (-f)^{k-j}.
Rational corr_by_inclusion(int k, long N, long n) {
  const Rational f{srs::Integer(n), srs::Integer(N)};
  Rational acc;
  for (int j = 0; j <= k; ++j) {
    Rational incl = j > n ? r(0) : Rational(srs::binomial(N - j, n - j), srs::binomial(N, n));
    acc += Rational(srs::binomial(k, j)) * incl * (-f).pow(k - j);
  }
  return acc;
}

}  // namespace

TEST_CASE("exact correlations") {
  CHECK(srs::corr_exact(0, 9, 4) == r(1));
  CHECK(srs::corr_exact(1, 9, 4) == r(0));
  CHECK(srs::corr_exact(2, 10, 5) == Rational::parse("-1/36"));
  for (int k = 0; k <= 9; ++k)
    for (long N = std::max(1, k); N <= 25; ++N)
      for (long n = 0; n <= N; ++n) CHECK(srs::corr_exact(k, N, n) == corr_by_inclusion(k, N, n));
  CHECK(srs::corr_exact(6, 6, 6) == r(0));
  CHECK_THROWS_AS(srs::corr_exact(2, 10, 11), srs::Error);
  CHECK_THROWS_AS(srs::corr_exact(5, 4, 2), srs::Error);
  CHECK_THROWS_AS(srs::corr_exact(1, 0, 0), srs::Error);
}

TEST_CASE("parity exponent") {
  CHECK(srs::parity_exponent(4) == 2);
  CHECK(srs::parity_exponent(7) == 4);
  CHECK(srs::parity_exponent(0) == 0);
  CHECK(srs::parity_exponent(1) == 1);
}

TEST_CASE("theorem limits") {
  const Rational half = Rational::parse("1/2");
  CHECK(srs::theorem_limit(4, half) == Rational::parse("3/16"));
  CHECK(srs::theorem_limit(3, half) == r(0));
  const Rational f = Rational::parse("1/3");
  CHECK(srs::theorem_limit(9, f) == r(2520) * (f * (f - r(1))).pow(4) * (r(2) * f - r(1)));
  CHECK(srs::theorem_limit(2, f) == f * (f - r(1)));
  CHECK_THROWS_AS(srs::theorem_limit(2, r(1)), srs::Error);
  CHECK_THROWS_AS(srs::theorem_limit(2, r(0)), srs::Error);
  CHECK_THROWS_AS(srs::theorem_limit(1, half), srs::Error);

  auto spec = srs::limit_spec(5, f);
  CHECK(spec.exponent == 3);
  CHECK(spec.value == srs::theorem_limit(5, f));
}

TEST_CASE("alpha tables reconstruct correlations") {
  auto t0 = srs::alpha_coefficients(0);
  CHECK(t0.coefficient(0, r(7)) == r(1));
  for (int k = 0; k <= 6; ++k) {
    auto t = srs::alpha_coefficients(k);
    for (long N = std::max(2, k); N <= 20; ++N)
      for (long n = 1; n < N; ++n) CHECK(t.reconstruct_corr(N, n) == srs::corr_exact(k, N, n));
  }
  CHECK(srs::alpha_coefficients(2).reconstruct_corr(10, 5) == Rational::parse("-1/36"));
}

TEST_CASE("coefficient limits") {
  CHECK(srs::coefficient_limit(4, 0) == r(3));
  CHECK(srs::coefficient_limit(4, 3) == r(0));
  CHECK(srs::coefficient_limit(3, 0) == r(4));
  // 2f(f-1)(2f-1) = 4f^3 - 6f^2 + 2f
  CHECK(srs::coefficient_limit(3, 1) == r(-6));
  CHECK(srs::coefficient_limit(3, 2) == r(2));
  CHECK(srs::coefficient_limit(3, 3) == r(0));
  for (int k = 2; k <= 9; ++k)
    for (const char* fs : {"1/10", "2/7", "1/2", "5/6"}) {
      Rational f = Rational::parse(fs), acc;
      for (int v = 0; v <= k; ++v) acc += srs::coefficient_limit(k, v) * f.pow(k - v);
      CHECK(acc == srs::theorem_limit(k, f));
    }
}

TEST_CASE("records") {
  auto rec = srs::make_record(2, 10, 5);
  CHECK(rec.f == Rational::parse("1/2"));
  CHECK(rec.scaled == Rational::parse("-10/36"));
  REQUIRE(rec.limit);
  CHECK(*rec.limit == Rational::parse("-1/4"));
  CHECK(*rec.abs_error == Rational::parse("1/36"));
  CHECK(*srs::make_record(0, 5, 2).limit == r(1));
  CHECK(*srs::make_record(1, 5, 2).limit == r(0));
  CHECK_FALSE(srs::make_record(3, 5, 0).limit);
}

TEST_CASE("convergence scan") {
  const Rational half = Rational::parse("1/2");
  std::vector<std::int64_t> g1{10};
  auto s1 = srs::convergence_scan(2, half, g1);
  REQUIRE(s1.size() == 1);
  REQUIRE(s1[0].record);
  CHECK(s1[0].record->corr == Rational::parse("-1/36"));
  CHECK(s1[0].record->scaled == Rational::parse("-10/36"));
  CHECK(*s1[0].record->limit == Rational::parse("-1/4"));

  std::vector<std::int64_t> g2{10, 20, 40, 80};
  for (const auto& e : srs::convergence_scan(3, half, g2)) {
    REQUIRE(e.record);
    CHECK(*e.record->limit == r(0));
    CHECK(e.record->scaled == r(0));
  }

  std::vector<std::int64_t> g3{1000, 2000, 4000};
  auto s3 = srs::convergence_scan(4, Rational::parse("2/5"), g3);
  CHECK(*s3[1].record->abs_error < *s3[0].record->abs_error);
  CHECK(*s3[2].record->abs_error < *s3[1].record->abs_error);

  // Bad entries are reported in place; the rest of the grid is still evaluated.
  std::vector<std::int64_t> g4{1, 3, 30};
  auto s4 = srs::convergence_scan(2, Rational::parse("1/10"), g4, 3);
  REQUIRE(s4.size() == 3);
  CHECK_FALSE(s4[0].record);
  CHECK_FALSE(s4[1].record);  // n rounds to 0
  CHECK_FALSE(s4[1].error.empty());
  CHECK(s4[2].record);

  // Worker count does not change the output.
  std::vector<std::int64_t> g5{50, 60, 70, 80, 90, 100};
  auto a = srs::convergence_scan(5, Rational::parse("3/7"), g5, 1);
  auto b = srs::convergence_scan(5, Rational::parse("3/7"), g5, 4);
  for (std::size_t i = 0; i < g5.size(); ++i) {
    CHECK(a[i].N == g5[i]);
    CHECK(a[i].record->scaled == b[i].record->scaled);
  }

  std::vector<std::int64_t> unsorted{20, 10};
  CHECK_THROWS_AS(srs::convergence_scan(2, half, unsorted), srs::Error);
  CHECK_THROWS_AS(srs::convergence_scan(2, r(2), g1), srs::Error);
}

TEST_CASE("rounded sample size") {
  CHECK(srs::rounded_sample_size(Rational::parse("2/5"), 2000) == 800);
  CHECK(srs::rounded_sample_size(Rational::parse("1/2"), 3) == 2);
  CHECK(srs::rounded_sample_size(Rational::parse("1/10"), 4) == 0);
}
