#include "core/ppoly.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>

#include "json.hpp"

namespace srs {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Poly::coeff(int i) const {
  return (i < 0 || i >= static_cast<int>(c_.size())) ? Rational(0) : c_[i];
}

Rational Poly::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::shifted(const Rational& a) const {
  std::vector<Rational> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    // c_i (x + a)^i = c_i sum_l C(i,l) a^(i-l) x^l
    Rational apow(1);
    for (long l = static_cast<long>(i); l >= 0; --l) {
      out[l] += c_[i] * Rational(binomial(static_cast<long>(i), l)) * apow;
      apow *= a;
    }
  }
  return Poly(std::move(out));
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& s) {
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(out));
}

std::string Poly::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : c_) arr.push_back(c.str());
  return arr.dump();
}

Poly Poly::from_json(const std::string& text) {
  auto arr = nlohmann::json::parse(text);
  if (!arr.is_array()) throw Error(ErrorKind::InvalidArgument, "polynomial JSON must be an array");
  std::vector<Rational> c;
  for (const auto& e : arr) c.push_back(Rational::parse(e.get<std::string>()));
  return Poly(std::move(c));
}

Poly weighted_prefix_poly(const Poly& q_poly) {
  // T(q) = q * q_poly(q + 1) has no constant term, so summing T over 1..j-1 is
  // the same as summing over 0..j-1, which Faulhaber gives as a polynomial in j.
  Poly shifted = q_poly.shifted(Rational(1));
  Poly sum;
  for (int i = 0; i <= shifted.degree(); ++i) {
    const Rational& t = shifted.coeffs()[i];
    if (t.is_zero()) continue;
    sum += Poly(faulhaber_coefficients(i + 1)) * t;
  }
  return sum;
}

namespace {

struct PCache {
  std::shared_mutex mu;
  std::map<PKey, Poly> polys;
  std::map<int, std::vector<std::vector<Rational>>> p0_tables;
};

PCache& cache() {
  static PCache c;
  return c;
}

// table[m][j] = P0_{k,m}(j) for 0 <= m <= k + 1 and 0 <= j <= k + 1.
const std::vector<std::vector<Rational>>& p0_table(int k) {
  auto& c = cache();
  {
    std::shared_lock lock(c.mu);
    auto it = c.p0_tables.find(k);
    if (it != c.p0_tables.end()) return it->second;
  }
  std::vector<std::vector<Rational>> t(k + 2, std::vector<Rational>(k + 2));
  for (auto& v : t[0]) v = Rational(1);
  for (int m = 1; m <= k + 1; ++m) {
    int top = k - m;
    for (int j = k; j >= 0; --j) {
      if (j <= top) t[m][j] = Rational(j) * t[m - 1][j + 1] + t[m][j + 1];
    }
  }
  std::unique_lock lock(c.mu);
  return c.p0_tables.emplace(k, std::move(t)).first->second;
}

}  // namespace

Poly p_poly(int k, int m) {
  if (k < 0 || m < 0) throw Error(ErrorKind::InvalidArgument, "p_poly: negative index");
  if (m == 0) return Poly::constant(Rational(1));
  auto& c = cache();
  {
    std::shared_lock lock(c.mu);
    auto it = c.polys.find({k, m});
    if (it != c.polys.end()) return it->second;
  }
  Poly s = weighted_prefix_poly(p_poly(k, m - 1));
  Rational upper = (k - m >= 1) ? s(Rational(k - m + 1)) : Rational(0);
  Poly p = Poly::constant(upper) - s;
  std::unique_lock lock(c.mu);
  return c.polys.emplace(PKey{k, m}, std::move(p)).first->second;
}

Rational p0_eval(int k, int m, int j) {
  if (k < 0 || m < 0 || j < 0) throw Error(ErrorKind::InvalidArgument, "p0_eval: negative index");
  if (m == 0) return Rational(1);
  if (m > k + 1 || j > k + 1) return Rational(0);
  return p0_table(k)[m][j];
}

namespace {

void enumerate_products(std::int64_t next, std::int64_t j_top, int remaining, const Integer& prod,
                        Integer& acc) {
  if (remaining == 0) {
    acc += prod;
    return;
  }
  for (std::int64_t l = next; l <= j_top - remaining + 1; ++l) {
    enumerate_products(l + 1, j_top, remaining - 1, Integer(prod * l), acc);
  }
}

}  // namespace

Rational elementary_sum_oracle(std::int64_t j_top, int v, std::int64_t u) {
  if (v < 0) throw Error(ErrorKind::InvalidArgument, "elementary_sum_oracle: negative v");
  Integer acc;
  enumerate_products(u, j_top, v, Integer(1), acc);
  return Rational(acc);
}

Rational falling_factorial_via_p0(int j, int k, const Rational& x) {
  if (k < 0 || j < k) throw Error(ErrorKind::InvalidArgument, "falling_factorial_via_p0: need j >= k >= 0");
  Rational acc;
  for (int v = 0; v <= j - k; ++v) {
    Rational term = p0_eval(j, v, k) * x.pow(j - k - v);
    if (v % 2) acc -= term; else acc += term;
  }
  return acc;
}

}  // namespace srs
