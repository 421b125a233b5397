#include "doctest.h"

#include <cmath>
#include <map>
#include <vector>

#include "core/correlation.hpp"
#include "core/oracle.hpp"

using srs::Rational;

TEST_CASE("hypergeometric inclusion probability") {
  CHECK(srs::hypergeom_inclusion_prob(0, 8, 3) == Rational(1));
  CHECK(srs::hypergeom_inclusion_prob(1, 8, 2) == Rational::parse("1/4"));
  CHECK(srs::hypergeom_inclusion_prob(2, 4, 2) == Rational::parse("1/6"));
  CHECK(srs::hypergeom_inclusion_prob(3, 4, 2) == Rational(0));
}

TEST_CASE("brute force correlations") {
  CHECK(srs::brute_force_corr(2, 6, 3) == Rational::parse("-1/20"));
  CHECK(srs::brute_force_corr(1, 6, 3) == Rational(0));
  std::vector<std::int64_t> h1{0, 1, 2}, h2{1, 3, 5};
  CHECK(srs::brute_force_corr(h1, 6, 3) == srs::brute_force_corr(h2, 6, 3));
  CHECK(srs::brute_force_corr(h1, 6, 3) == srs::brute_force_corr(3, 6, 3));
  CHECK(srs::brute_force_corr(0, 5, 2) == Rational(1));
  CHECK(srs::brute_force_corr(2, 5, 0) == Rational::parse("0"));
}

TEST_CASE("brute force guards and domain errors") {
  auto kind = [](auto f) {
    try {
      f();
    } catch (const srs::Error& e) {
      return static_cast<int>(e.kind());
    }
    return -1;
  };
  CHECK(kind([] { srs::brute_force_corr(2, 40, 20); }) == static_cast<int>(srs::ErrorKind::Guard));
  CHECK(kind([] { srs::brute_force_corr(5, 4, 2); }) == static_cast<int>(srs::ErrorKind::Domain));
  std::vector<std::int64_t> dup{1, 1};
  CHECK_THROWS_AS(srs::brute_force_corr(dup, 5, 2), srs::Error);
  std::vector<std::int64_t> outside{0, 7};
  CHECK_THROWS_AS(srs::brute_force_corr(outside, 5, 2), srs::Error);
}

TEST_CASE("generator is reproducible") {
  srs::Xoshiro256 a(42), b(42), c(43);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    auto x = a.next();
    CHECK(x == b.next());
    differs = differs || x != c.next();
  }
  CHECK(differs);
  for (int i = 0; i < 1000; ++i) CHECK(a.below(7) < 7);
  CHECK(srs::chunk_seed(42, 0) != srs::chunk_seed(42, 1));
}

TEST_CASE("sample_srs edge cases") {
  srs::Xoshiro256 rng(7);
  auto full = srs::sample_srs(5, 5, rng);
  CHECK(full.members == std::vector<std::int64_t>{0, 1, 2, 3, 4});
  CHECK(srs::sample_srs(5, 0, rng).members.empty());
  CHECK_THROWS_AS(srs::sample_srs(3, 4, rng), srs::Error);
  auto s = srs::sample_srs(100, 37, rng);
  CHECK(s.n() == 37);
  for (std::size_t i = 1; i < s.members.size(); ++i) CHECK(s.members[i - 1] < s.members[i]);
}

TEST_CASE("sample_srs is uniform over pairs of 4") {
  srs::Xoshiro256 rng(2024);
  std::map<std::vector<std::int64_t>, int> counts;
  const int draws = 60000;
  for (int i = 0; i < draws; ++i) ++counts[srs::sample_srs(4, 2, rng).members];
  CHECK(counts.size() == 6);
  const double p = 1.0 / 6.0, sigma = std::sqrt(draws * p * (1 - p));
  for (const auto& [subset, c] : counts) CHECK(std::abs(c - draws * p) <= 4 * sigma);
}

TEST_CASE("Monte Carlo estimates") {
  auto e1 = srs::monte_carlo_corr(1, 10, 4, 100000, 42);
  CHECK(std::abs(e1.mean) <= 4 * e1.std_error);

  auto e2 = srs::monte_carlo_corr(2, 10, 5, 1000000, 42);
  CHECK(std::abs(e2.mean - (-1.0 / 36.0)) <= 4 * e2.std_error);
  CHECK(e2.trials == 1000000);
  CHECK(e2.seed == 42);

  auto a = srs::monte_carlo_corr(3, 100, 37, 200000, 9, 1);
  auto b = srs::monte_carlo_corr(3, 100, 37, 200000, 9, 3);
  CHECK(a.mean == b.mean);
  CHECK(a.std_error == b.std_error);

  // Degenerate samples give a constant product and zero spread.
  auto d = srs::monte_carlo_corr(2, 6, 6, 1000, 1);
  CHECK(d.mean == 0.0);
  CHECK(d.std_error == 0.0);

  CHECK_THROWS_AS(srs::monte_carlo_corr(2, 10, 5, 0, 1), srs::Error);
  CHECK_THROWS_AS(srs::monte_carlo_corr(11, 10, 5, 10, 1), srs::Error);
}
