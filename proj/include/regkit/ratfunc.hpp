#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "regkit/series.hpp"

namespace regkit {

/// Dense univariate polynomial over a field K, coefficients in increasing
/// degree, with no trailing zeros. K must default-construct to 0 and be
/// constructible from long.
template <class K>
class Poly {
 public:
  Poly() = default;
  Poly(K c) : c_{std::move(c)} { trim(); }  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<K> cs) : c_(std::move(cs)) { trim(); }

  static Poly x() { return Poly(std::vector<K>{K(0L), K(1L)}); }
  static Poly monomial(K c, long d) {
    std::vector<K> cs(static_cast<size_t>(d) + 1, K(0L));
    cs.back() = std::move(c);
    return Poly(std::move(cs));
  }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  K coeff(long d) const { return d >= 0 && d <= degree() ? c_[static_cast<size_t>(d)] : K(0L); }
  const K& lead() const { return c_.back(); }
  const std::vector<K>& coeffs() const { return c_; }
  /// Smallest d with a nonzero coefficient (degree() + 1 for zero).
  long low_degree() const {
    for (size_t i = 0; i < c_.size(); ++i)
      if (!(c_[i] == K(0L))) return static_cast<long>(i);
    return degree() + 1;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<K> cs(std::max(a.c_.size(), b.c_.size()), K(0L));
    for (size_t i = 0; i < a.c_.size(); ++i) cs[i] = cs[i] + a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) cs[i] = cs[i] + b.c_[i];
    return Poly(std::move(cs));
  }
  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<K> cs(a.c_.size() + b.c_.size() - 1, K(0L));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == K(0L)) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) cs[i + j] = cs[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(std::move(cs));
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scale(const K& s) const {
    std::vector<K> cs = c_;
    for (auto& c : cs) c = c * s;
    return Poly(std::move(cs));
  }

  /// Euclidean division: a = q*b + r with deg r < deg b.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<K> r = a.c_;
    const long db = b.degree();
    const long da = a.degree();
    if (da < db) return {Poly(), a};
    std::vector<K> q(static_cast<size_t>(da - db + 1), K(0L));
    const K inv_lead = K(1L) / b.lead();
    for (long d = da; d >= db; --d) {
      const K f = r[static_cast<size_t>(d)] * inv_lead;
      q[static_cast<size_t>(d - db)] = f;
      if (f == K(0L)) continue;
      for (long i = 0; i <= db; ++i) r[static_cast<size_t>(d - db + i)] = r[static_cast<size_t>(d - db + i)] - f * b.c_[static_cast<size_t>(i)];
    }
    r.resize(static_cast<size_t>(db));
    return {Poly(std::move(q)), Poly(std::move(r))};
  }
  friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

  Poly monic() const {
    if (is_zero()) return *this;
    return scale(K(1L) / lead());
  }

  /// Monic gcd (zero if both are zero).
  static Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
      Poly r = a % b;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<K> cs;
    for (size_t i = 1; i < c_.size(); ++i) cs.push_back(c_[i] * K(static_cast<long>(i)));
    return Poly(std::move(cs));
  }

  template <class V>
  V eval(const V& x) const {
    V acc = V(K(0L));
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + V(*it);
    return acc;
  }
  K operator()(const K& x) const {
    K acc(0L);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly pow(long e) const {
    Poly r(K(1L)), base = *this;
    while (e > 0) {
      if (e & 1) r = r * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == K(0L)) c_.pop_back();
  }
  std::vector<K> c_;
};

using QPoly = Poly<mpq_class>;

std::string to_string(const QPoly& f, const std::string& var = "t");

/// Element num/den of Q(t), kept with gcd(num, den) = 1 and den monic.
class RatFunc {
 public:
  RatFunc() : den_(mpq_class(1)) {}
  RatFunc(long c) : num_(mpq_class(c)), den_(mpq_class(1)) {}             // NOLINT(google-explicit-constructor)
  RatFunc(const mpq_class& c) : num_(canonical(c)), den_(mpq_class(1)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(QPoly num) : num_(std::move(num)), den_(mpq_class(1)) {}        // NOLINT(google-explicit-constructor)
  RatFunc(QPoly num, QPoly den);

  static RatFunc t() { return RatFunc(QPoly::x()); }

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  /// The constant value (requires is_constant()).
  mpq_class constant_value() const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  RatFunc operator-() const { return {-num_, den_, Normalized{}}; }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

  RatFunc inverse() const;
  RatFunc pow(long e) const;
  RatFunc derivative() const;
  /// Value at a rational point (throws DomainError at a pole).
  mpq_class operator()(const mpq_class& t) const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  std::string to_string() const;

 private:
  static mpq_class canonical(mpq_class c) {
    c.canonicalize();
    return c;
  }
  struct Normalized {};
  RatFunc(QPoly num, QPoly den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}
  QPoly num_, den_;
};

/// Q(t)[x].
using XPoly = Poly<RatFunc>;

std::string to_string(const XPoly& f);

template <>
struct RingTraits<RatFunc> {
  using Context = NoContext;
  static RatFunc zero(const Context&) { return {}; }
  static RatFunc from_rational(const Context&, const mpq_class& q) { return q; }
  static bool is_exact_zero(const RatFunc& x) { return x.is_zero(); }
  static bool is_zero(const RatFunc& x) { return x.is_zero(); }
  static bool is_unit(const RatFunc& x) { return !x.is_zero(); }
  static RatFunc inverse(const RatFunc& x) { return x.inverse(); }
  static RatFunc div_int(const RatFunc& x, long n) { return x * RatFunc(mpq_class(1) / mpq_class(n)); }
  static RatFunc mul_int(const RatFunc& x, long n) { return x * RatFunc(n); }
  static RatFunc frobenius(const RatFunc& x) { return x; }
  static long precision(const RatFunc&) { return kInfinite; }
  static std::string to_string(const RatFunc& x) { return x.to_string(); }
};

using RSeries = Series<RatFunc>;

}  // namespace regkit
