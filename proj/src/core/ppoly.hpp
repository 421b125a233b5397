#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "core/exactnum.hpp"

namespace srs {

/// Dense univariate polynomial with rational coefficients, lowest degree first.
/// The zero polynomial has no coefficients; otherwise the top one is nonzero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  static Poly constant(const Rational& c) { return Poly({c}); }
  static Poly identity() { return Poly({Rational(0), Rational(1)}); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational operator()(const Rational& x) const;
  /// x -> p(x + a)
  Poly shifted(const Rational& a) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// JSON array of canonical coefficient strings, lowest degree first.
  std::string to_json() const;
  static Poly from_json(const std::string& text);

 private:
  void trim();
  std::vector<Rational> c_;
};

/// S with S(j) = sum_{q=1}^{j-1} q * q_poly(q + 1) for every integer j >= 1.
Poly weighted_prefix_poly(const Poly& q_poly);

struct PKey {
  int k = 0;
  int m = 0;
  auto operator<=>(const PKey&) const = default;
};

/// The polynomial P_{k,m}(j). P_{k,0} = 1 and
/// P_{k,m}(j) = sum_{q=1}^{k-m} q P_{k,m-1}(q+1) - sum_{q=1}^{j-1} q P_{k,m-1}(q+1).
Poly p_poly(int k, int m);

/// P0_{k,0}(j) = 1, P0_{k,m}(j) = sum_{q=j}^{k-m} q P0_{k,m-1}(q+1), empty sums 0.
Rational p0_eval(int k, int m, int j);

/// Sum over u <= l_1 < ... < l_v <= j_top of l_1 * ... * l_v by plain enumeration.
/// An empty product is 1, so v = 0 gives 1; j_top < u leaves only that case.
Rational elementary_sum_oracle(std::int64_t j_top, int v, std::int64_t u);

/// sum_{v=0}^{j-k} (-1)^v P0_{j,v}(k) x^{j-k-v}, which equals (x - k)_{j-k}.
Rational falling_factorial_via_p0(int j, int k, const Rational& x);

}  // namespace srs
