#include "core/exactnum.hpp"

#include <cctype>
#include <mutex>
#include <ostream>

namespace srs {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorKind::Domain, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s, bool allow_sign) -> Integer {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) throw Error(ErrorKind::InvalidArgument, "malformed rational '" + std::string(text) + "'");
    for (std::size_t p = i; p < s.size(); ++p) {
      if (!std::isdigit(static_cast<unsigned char>(s[p])))
        throw Error(ErrorKind::InvalidArgument, "malformed rational '" + std::string(text) + "'");
    }
    std::string digits(s.substr(i));
    Integer v(digits, 10);
    return (i == 1 && s[0] == '-') ? Integer(-v) : v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, true));
  Integer num = parse_int(text.substr(0, slash), true);
  Integer den = parse_int(text.substr(slash + 1), false);
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::decimal(int digits) const {
  if (digits < 0) throw Error(ErrorKind::InvalidArgument, "negative decimal precision");
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Integer mag = v_.get_num() * scale;
  mpz_abs(mag.get_mpz_t(), mag.get_mpz_t());
  const Integer& den = v_.get_den();
  Integer q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), mag.get_mpz_t(), den.get_mpz_t());
  int c = cmp(Integer(2 * r), den);
  if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;

  std::string s = q.get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  if (sign() < 0 && q != 0) s.insert(0, "-");
  return s;
}

Rational Rational::abs() const {
  Rational r;
  r.v_ = ::abs(v_);
  return r;
}

Rational Rational::pow(long e) const {
  if (e < 0) return Rational(1) / pow(-e);
  Rational r;
  mpz_pow_ui(r.v_.get_num_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(r.v_.get_den_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::Domain, "division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::optional<HalfInteger> HalfInteger::from_rational(const Rational& r) {
  Rational twice = r * Rational(2);
  if (!twice.is_integer()) return std::nullopt;
  return HalfInteger(twice.num());
}

Integer binomial(long n, long k) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "binomial: negative n");
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer factorial(long n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "factorial: negative argument");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Rational falling_factorial(const Rational& x, long j) {
  if (j < 0) throw Error(ErrorKind::InvalidArgument, "falling_factorial: negative length");
  Rational r(1);
  for (long i = 0; i < j; ++i) r *= x - Rational(i);
  return r;
}

namespace {

// Lazily grown triangle guarded by a mutex; rows are never shrunk.
class StirlingTriangle {
 public:
  using Step = Integer (*)(const std::vector<Integer>& prev, long row, long col);

  explicit StirlingTriangle(Step step) : step_(step) { rows_.push_back({Integer(1)}); }

  Integer get(long row, long col) {
    if (col < 0 || col > row) return 0;
    std::lock_guard lock(mu_);
    while (static_cast<long>(rows_.size()) <= row) {
      const auto& prev = rows_.back();
      long r = static_cast<long>(rows_.size());
      std::vector<Integer> next(r + 1);
      for (long c = 0; c <= r; ++c) next[c] = step_(prev, r - 1, c);
      rows_.push_back(std::move(next));
    }
    return rows_[row][col];
  }

 private:
  Step step_;
  std::mutex mu_;
  std::vector<std::vector<Integer>> rows_;
};

Integer at(const std::vector<Integer>& row, long c) {
  return (c < 0 || c >= static_cast<long>(row.size())) ? Integer(0) : row[c];
}

}  // namespace

Integer stirling_first_unsigned(long j, long v) {
  if (j < 0) throw Error(ErrorKind::InvalidArgument, "stirling_first_unsigned: negative j");
  // [j+1, v] = j [j, v] + [j, v-1]
  static StirlingTriangle tri([](const std::vector<Integer>& prev, long j0, long c) {
    return Integer(j0 * at(prev, c) + at(prev, c - 1));
  });
  return tri.get(j, v);
}

Integer stirling_second(long m, long k) {
  if (m < 0 || k < 0) throw Error(ErrorKind::InvalidArgument, "stirling_second: negative argument");
  // {m+1, k} = k {m, k} + {m, k-1}
  static StirlingTriangle tri([](const std::vector<Integer>& prev, long, long c) {
    return Integer(c * at(prev, c) + at(prev, c - 1));
  });
  return tri.get(m, k);
}

Rational bernoulli(long p) {
  if (p < 0) throw Error(ErrorKind::InvalidArgument, "bernoulli: negative index");
  static std::mutex mu;
  static std::vector<Rational> memo{Rational(1)};
  std::lock_guard lock(mu);
  while (static_cast<long>(memo.size()) <= p) {
    long m = static_cast<long>(memo.size());
    Rational acc;
    for (long j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * memo[j];
    memo.push_back(-acc / Rational(m + 1));
  }
  return memo[p];
}

std::vector<Rational> faulhaber_coefficients(long m) {
  if (m < 0) throw Error(ErrorKind::InvalidArgument, "faulhaber_coefficients: negative power");
  std::vector<Rational> c(m + 2);
  for (long p = 0; p <= m; ++p) {
    c[m + 1 - p] = Rational(binomial(m + 1, p)) * bernoulli(p) / Rational(m + 1);
  }
  return c;
}

Rational sum_of_powers(long k, long m) {
  if (k < 0 || m < 0) throw Error(ErrorKind::InvalidArgument, "sum_of_powers: negative argument");
  auto c = faulhaber_coefficients(m);
  Rational acc;
  Rational kk(k);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * kk + *it;
  return acc;
}

Integer normal_moment(long k) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "normal_moment: negative order");
  if (k % 2 != 0) return 0;
  Integer r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k > 0 ? k - 1 : 0));
  return r;
}

namespace {

// Gamma at a positive integer or half-integer, as coeff * sqrt(pi)^(half ? 1 : 0).
struct GammaValue {
  Rational coeff;
  bool sqrt_pi = false;
};

GammaValue gamma_at(const Integer& twice) {
  if (mpz_even_p(twice.get_mpz_t())) {
    long z = Integer(twice / 2).get_si();
    return {Rational(factorial(z - 1)), false};
  }
  long b = Integer((twice - 1) / 2).get_si();
  if (b == 0) return {Rational(1), true};
  Integer pow2;
  mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(2 * b - 1));
  return {Rational(factorial(2 * b - 1), Integer(pow2 * factorial(b - 1))), true};
}

}  // namespace

Rational gamma_ratio(long m, const HalfInteger& beta) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "gamma_ratio: m must be >= 1");
  if (beta.twice_value() <= 0) throw Error(ErrorKind::Domain, "gamma_ratio: beta must be positive");
  GammaValue gb = gamma_at(beta.twice_value());
  GammaValue gmb = gamma_at(Integer(beta.twice_value() + 2 * m));
  // Gamma(beta) and Gamma(m + beta) share the sqrt(pi) factor, so it cancels.
  return Rational(factorial(m - 1)) * gb.coeff / gmb.coeff;
}

Rational alternating_fraction_sum(long m, const Rational& alpha, const Rational& delta,
                                  const Rational& gamma, const Rational& beta) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "alternating_fraction_sum: m must be >= 1");
  if (gamma.is_zero()) throw Error(ErrorKind::Domain, "alternating_fraction_sum: gamma is zero");
  Rational b = beta / gamma;
  if (b.is_integer() && b.sign() <= 0 && b > Rational(-m)) {
    throw Error(ErrorKind::Domain, "alternating_fraction_sum: beta/gamma = " + b.str() + " is a pole");
  }
  auto half = HalfInteger::from_rational(b);
  if (!half || b.sign() <= 0) {
    throw Error(ErrorKind::Domain, "alternating_fraction_sum: beta/gamma = " + b.str() +
                                       " is not a positive integer or half-integer");
  }
  Rational r = alpha / gamma * Rational(detail::kronecker(m - 1));
  r += gamma_ratio(m, *half) / gamma * (delta - alpha * b) * Rational(detail::unit_step(m - 1));
  return r;
}

}  // namespace srs
