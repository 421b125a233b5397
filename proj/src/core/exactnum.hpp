#pragma once

// Exact-arithmetic kernel: arbitrary precision integers and rationals plus the
// combinatorial numbers (binomials, Stirling, Bernoulli, normal moments) and
// the alternating binomial sums used by the correlation machinery.

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace srs {

using Integer = mpz_class;

enum class ErrorKind {
  InvalidArgument,  // malformed input or violated precondition
  Domain,           // mathematically undefined request (pole, f outside (0,1), ...)
  Guard,            // refused for size reasons
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Exact rational, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : v_(v) {}   // NOLINT(google-explicit-constructor)
  explicit Rational(const Integer& v) : v_(v) {}
  Rational(const Integer& num, const Integer& den);

  /// Parses "p/q" or "p" (optional leading '-'); throws Error on malformed text
  /// or a zero denominator.
  static Rational parse(std::string_view text);

  Integer num() const { return v_.get_num(); }
  Integer den() const { return v_.get_den(); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  /// Canonical "p/q", or "p" when q == 1.
  std::string str() const;
  /// Fixed-point rendering with `digits` fractional digits, rounded half-to-even.
  std::string decimal(int digits) const;
  double to_double() const { return v_.get_d(); }

  Rational abs() const;
  Rational pow(long e) const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { Rational r; r.v_ = -v_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// A number with denominator 1 or 2, stored as twice its value.
class HalfInteger {
 public:
  explicit HalfInteger(Integer twice_value) : twice_(std::move(twice_value)) {}
  static std::optional<HalfInteger> from_rational(const Rational& r);

  const Integer& twice_value() const { return twice_; }
  bool is_integer() const { return mpz_even_p(twice_.get_mpz_t()) != 0; }
  Rational value() const { return Rational(twice_, Integer(2)); }

 private:
  Integer twice_;
};

Integer binomial(long n, long k);
Integer factorial(long n);
Rational falling_factorial(const Rational& x, long j);

/// Unsigned Stirling numbers of the first kind: (x)_j = sum_v [j v] (-1)^(j-v) x^v.
Integer stirling_first_unsigned(long j, long v);
/// Stirling numbers of the second kind {m k}.
Integer stirling_second(long m, long k);

/// B_p from sum_{j<=m} C(m+1,j) B_j = delta(m); B_1 = -1/2.
Rational bernoulli(long p);

/// Coefficients (lowest degree first) of the Faulhaber polynomial F_m with
/// F_m(k) = sum_{p=0}^{k-1} p^m for every integer k >= 0 (0^0 = 1).
std::vector<Rational> faulhaber_coefficients(long m);
Rational sum_of_powers(long k, long m);

/// E Z^k for a standard normal Z.
Integer normal_moment(long k);

/// Gamma(m) Gamma(beta) / Gamma(m + beta) for integer or half-integer beta > 0.
Rational gamma_ratio(long m, const HalfInteger& beta);

/// sum_{n=0}^{m-1} (-1)^n C(m-1,n) (alpha n + delta) / (gamma n + beta), evaluated
/// through its Gamma-ratio closed form. beta/gamma must be a positive integer or
/// positive half-integer.
Rational alternating_fraction_sum(long m, const Rational& alpha, const Rational& delta,
                                  const Rational& gamma, const Rational& beta);

namespace detail {
inline int kronecker(long m) { return m == 0 ? 1 : 0; }
inline int unit_step(long n) { return n >= 0 ? 1 : 0; }
}  // namespace detail

}  // namespace srs
