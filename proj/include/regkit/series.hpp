#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "regkit/padic.hpp"

namespace regkit {

struct NonIntegrable : DomainError {
  NonIntegrable(const std::string& what, std::string residue_value)
      : DomainError(what), residue(std::move(residue_value)) {}
  std::string residue;
};

struct NoContext {
  friend bool operator==(NoContext, NoContext) { return true; }
};

/// Prime plus the default cap used when a rational constant enters the ring.
/// Integers always enter exactly.
struct PadicContext {
  int p = 0;
  long prec = 0;
  friend bool operator==(const PadicContext&, const PadicContext&) = default;
};

template <class R>
struct RingTraits;

template <>
struct RingTraits<mpq_class> {
  using Context = NoContext;
  static mpq_class zero(const Context&) { return 0; }
  static mpq_class from_rational(const Context&, const mpq_class& q) { return q; }
  static bool is_exact_zero(const mpq_class& x) { return x == 0; }
  static bool is_zero(const mpq_class& x) { return x == 0; }
  static bool is_unit(const mpq_class& x) { return x != 0; }
  static mpq_class inverse(const mpq_class& x) {
    if (x == 0) throw DomainError("inverse of zero");
    return 1 / x;
  }
  static mpq_class div_int(const mpq_class& x, long n) { return x / n; }
  static mpq_class mul_int(const mpq_class& x, long n) { return x * n; }
  static mpq_class frobenius(const mpq_class& x) { return x; }
  static long precision(const mpq_class&) { return kInfinite; }
  static std::string to_string(const mpq_class& x) { return x.get_str(); }
};

template <>
struct RingTraits<Padic> {
  using Context = PadicContext;
  static Padic zero(const Context& c) { return Padic::exact_zero(c.p); }
  static Padic from_rational(const Context& c, const mpq_class& q) {
    if (q.get_den() == 1) return Padic::from_int(c.p, q.get_num());
    return Padic::from_rational(c.p, q, c.prec);
  }
  static bool is_exact_zero(const Padic& x) { return x.is_exact_zero(); }
  static bool is_zero(const Padic& x) { return x.is_zero(); }
  static bool is_unit(const Padic& x) { return x.is_unit(); }
  static Padic inverse(const Padic& x) { return x.inverse(); }
  static Padic div_int(const Padic& x, long n) { return x.div_int(n); }
  static Padic mul_int(const Padic& x, long n) { return x.mul_int(n); }
  static Padic frobenius(const Padic& x) { return x; }
  static long precision(const Padic& x) { return x.precision(); }
  static std::string to_string(const Padic& x) { return x.to_string(); }
};

template <>
struct RingTraits<Eis> {
  using Context = PadicContext;
  static Eis zero(const Context& c) { return Eis::exact_zero(c.p); }
  static Eis from_rational(const Context& c, const mpq_class& q) {
    return Eis::from_padic(RingTraits<Padic>::from_rational(c, q));
  }
  static bool is_exact_zero(const Eis& x) { return x.is_exact_zero(); }
  static bool is_zero(const Eis& x) { return x.is_zero(); }
  static bool is_unit(const Eis& x) { return x.is_unit(); }
  static Eis inverse(const Eis& x) { return x.inverse(); }
  static Eis div_int(const Eis& x, long n) { return x.div_int(n); }
  static Eis mul_int(const Eis& x, long n) { return x.mul_int(n); }
  static Eis frobenius(const Eis& x) { return eis_frobenius(x); }
  static long precision(const Eis& x) { return x.precision(); }
  static std::string to_string(const Eis& x) { return x.to_string(); }
};

/// Truncated Laurent series sum_{low <= e < trunc} c_e t^e + O(t^trunc).
///
/// Coefficient e lives at index e - low; exponents past the stored range and
/// below trunc are exact zeros, so trunc = kInfinite describes a polynomial.
/// The truncation order only ever shrinks to what the operands justify;
/// p-adic coefficients carry their own precision, which forms the
/// per-coefficient ledger.
template <class R>
class Series {
 public:
  using Traits = RingTraits<R>;
  using Context = typename Traits::Context;

  Series() = default;
  /// The zero series O(t^trunc).
  Series(Context ctx, long trunc) : ctx_(ctx), low_(std::min(0L, trunc)), trunc_(trunc) {}
  Series(Context ctx, long low, std::vector<R> coeffs, long trunc)
      : ctx_(ctx), low_(low), trunc_(trunc), coeffs_(std::move(coeffs)) {
    normalize_storage();
  }

  static Series constant(Context ctx, R c, long trunc = kInfinite) { return Series(ctx, 0, {std::move(c)}, trunc); }
  static Series monomial(Context ctx, R c, long e, long trunc = kInfinite) {
    return Series(ctx, e, {std::move(c)}, trunc);
  }
  /// Coefficients given from t^0 upward.
  static Series from_rationals(Context ctx, const std::vector<mpq_class>& qs, long trunc = kInfinite) {
    std::vector<R> cs;
    cs.reserve(qs.size());
    for (const auto& q : qs) cs.push_back(Traits::from_rational(ctx, q));
    return Series(ctx, 0, std::move(cs), trunc);
  }
  static Series generate(Context ctx, long low, long trunc, const std::function<R(long)>& fn) {
    std::vector<R> cs;
    for (long e = low; e < trunc; ++e) cs.push_back(fn(e));
    return Series(ctx, low, std::move(cs), trunc);
  }
  /// The variable t (exact).
  static Series variable(Context ctx) { return monomial(ctx, Traits::from_rational(ctx, 1), 1); }
  static Series one(Context ctx) { return constant(ctx, Traits::from_rational(ctx, 1)); }

  const Context& context() const { return ctx_; }
  long low() const { return low_; }
  long trunc() const { return trunc_; }
  /// One past the last stored exponent (never beyond trunc).
  long end() const { return low_ + static_cast<long>(coeffs_.size()); }
  bool is_exact() const { return trunc_ >= kInfinite; }
  R scalar(const mpq_class& q) const { return Traits::from_rational(ctx_, q); }

  /// Coefficient of t^e; exponents outside the stored range are exact zeros.
  R operator[](long e) const {
    if (e >= trunc_) throw std::out_of_range("coefficient beyond truncation order");
    if (e < low_ || e >= end()) return Traits::zero(ctx_);
    return coeffs_[static_cast<size_t>(e - low_)];
  }

  /// Exponent of the first coefficient that is not exactly zero, or trunc.
  long valuation() const {
    for (size_t i = 0; i < coeffs_.size(); ++i)
      if (!Traits::is_exact_zero(coeffs_[i])) return low_ + static_cast<long>(i);
    return trunc_;
  }
  /// Pole order m with the series bounded below by t^-m.
  long pole_order() const { return std::max(0L, -valuation()); }

  /// Precision of each coefficient from min(low, 0) to trunc - 1.
  std::vector<long> precision_ledger() const {
    std::vector<long> out;
    for (long e = std::min(low_, 0L); e < trunc_ && e < std::max(end(), 0L); ++e) out.push_back(Traits::precision((*this)[e]));
    return out;
  }
  long min_precision() const {
    long m = kInfinite;
    for (const auto& c : coeffs_) m = std::min(m, Traits::precision(c));
    return m;
  }
  /// True if every coefficient is zero to its reported precision.
  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const R& c) { return Traits::is_zero(c); });
  }

  Series truncate(long m) const {
    if (m >= trunc_) return *this;
    Series out = *this;
    out.trunc_ = m;
    out.normalize_storage();
    return out;
  }

  Series map(const std::function<R(const R&)>& fn) const {
    Series out = *this;
    for (auto& c : out.coeffs_) c = fn(c);
    return out;
  }

  Series operator-() const {
    return map([](const R& c) { return -c; });
  }

  friend Series operator+(const Series& a, const Series& b) {
    const long t = std::min(a.trunc_, b.trunc_);
    const long lo = std::min(a.low_, b.low_);
    const long hi = std::min(t, std::max(a.end(), b.end()));
    std::vector<R> cs;
    for (long e = lo; e < hi; ++e) cs.push_back(a[e] + b[e]);
    return Series(a.ctx_, lo, std::move(cs), t);
  }
  friend Series operator-(const Series& a, const Series& b) { return a + (-b); }

  friend Series operator*(const Series& a, const Series& b) {
    const long va = a.valuation(), vb = b.valuation();
    const long t = std::min(sat_add(a.trunc_, vb), sat_add(b.trunc_, va));
    const long lo = a.low_ + b.low_;
    const long hi = std::min(t, a.end() + b.end() - 1);
    if (hi <= lo) return Series(a.ctx_, lo, {}, t);
    std::vector<R> cs(static_cast<size_t>(hi - lo), Traits::zero(a.ctx_));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
      const R& x = a.coeffs_[i];
      if (Traits::is_exact_zero(x)) continue;
      const long ei = a.low_ + static_cast<long>(i);
      for (size_t j = 0; j < b.coeffs_.size(); ++j) {
        const long e = ei + b.low_ + static_cast<long>(j);
        if (e >= hi) break;
        const R& y = b.coeffs_[j];
        if (Traits::is_exact_zero(y)) continue;
        auto& slot = cs[static_cast<size_t>(e - lo)];
        slot = slot + x * y;
      }
    }
    return Series(a.ctx_, lo, std::move(cs), t);
  }

  friend Series operator*(const Series& a, const R& s) {
    return a.map([&](const R& c) { return c * s; });
  }
  friend Series operator*(const R& s, const Series& a) { return a * s; }

  Series& operator+=(const Series& o) { return *this = *this + o; }
  Series& operator-=(const Series& o) { return *this = *this - o; }
  Series& operator*=(const Series& o) { return *this = *this * o; }

  Series mul_int(long n) const {
    return map([&](const R& c) { return Traits::mul_int(c, n); });
  }
  Series div_int(long n) const {
    return map([&](const R& c) { return Traits::div_int(c, n); });
  }

  /// Multiplication by t^k (exact).
  Series shift(long k) const {
    Series out = *this;
    out.low_ += k;
    out.trunc_ = sat_add(out.trunc_, k);
    return out;
  }

  /// 1/f for f = t^k u with u(0) invertible; known modulo t^(trunc - 2k).
  /// An exact f needs an explicit cap on the output order.
  Series inverse(long cap = kInfinite) const {
    const long k = valuation();
    if (k >= trunc_) throw DomainError("inverse of a series with no known nonzero coefficient");
    const Series u = shift(-k);
    const long m = std::min(u.trunc_, sat_add(cap, k));
    if (m >= kInfinite) throw std::logic_error("inverse of an exact series needs a truncation order");
    const R b0 = Traits::inverse(u[0]);
    std::vector<R> bs;
    bs.reserve(static_cast<size_t>(std::max(0L, m)));
    for (long n = 0; n < m; ++n) {
      if (n == 0) {
        bs.push_back(b0);
        continue;
      }
      R acc = Traits::zero(ctx_);
      for (long i = 1; i <= n && i < u.end(); ++i) {
        if (i < u.low_) continue;
        const R& ui = u.coeffs_[static_cast<size_t>(i - u.low_)];
        if (Traits::is_exact_zero(ui)) continue;
        acc = acc + ui * bs[static_cast<size_t>(n - i)];
      }
      bs.push_back(-(b0 * acc));
    }
    return Series(ctx_, 0, std::move(bs), m).shift(-k);
  }

  friend Series operator/(const Series& a, const Series& b) { return a * b.inverse(); }

  Series pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Series r = one(ctx_);
    Series base = *this;
    while (e > 0) {
      if (e & 1) r = r * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return r;
  }

  Series derivative() const {
    std::vector<R> out;
    const long lo = low_ - 1;
    for (long e = low_; e < end(); ++e) out.push_back(e == 0 ? Traits::zero(ctx_) : Traits::mul_int((*this)[e], e));
    return Series(ctx_, lo, std::move(out), sat_add(trunc_, -1));
  }

  /// Antiderivative with constant term exactly 0. The coefficient at t^n is
  /// c_(n-1)/n, so its precision drops by v_p(n).
  Series integrate() const {
    if (low_ <= -1 && trunc_ > -1) {
      const R res = (*this)[-1];
      if (!Traits::is_zero(res)) throw NonIntegrable("series has a nonzero residue", Traits::to_string(res));
    }
    std::vector<R> out;
    const long lo = low_ + 1;
    for (long n = lo; n <= end(); ++n) out.push_back(n == 0 ? Traits::zero(ctx_) : Traits::div_int((*this)[n - 1], n));
    return Series(ctx_, lo, std::move(out), sat_add(trunc_, 1));
  }

  /// f(g) for g with g(0) = 0 exactly. Negative exponents of f use 1/g.
  Series compose(const Series& g) const {
    const long vg = g.valuation();
    if (vg < 1 || vg >= g.trunc_) throw DomainError("compose: inner series must vanish at 0");
    const long cap = trunc_ >= kInfinite ? kInfinite : trunc_ * vg;
    Series acc(ctx_, cap);
    if (low_ < 0) {
      const Series ginv = g.inverse();
      Series pw = ginv;
      for (long e = -1; e >= low_; --e) {
        acc = acc + pw * (*this)[e];
        if (e > low_) pw = pw * ginv;
      }
    }
    Series pw = one(ctx_);
    for (long e = 0; e < end(); ++e) {
      if (pw.valuation() >= acc.trunc_) break;
      const R c = (*this)[e];
      if (!Traits::is_exact_zero(c)) acc = acc + pw * c;
      if (e + 1 < end()) pw = (pw * g).truncate(acc.trunc_);
    }
    return acc.truncate(cap);
  }

  /// Compositional inverse r with f(r) = t for f = a1 t + ..., a1 invertible.
  Series reversion() const {
    if (valuation() != 1 || low_ < 0) throw DomainError("reversion: series must be a1*t + O(t^2) with a1 != 0");
    const long m = trunc_;
    if (m >= kInfinite) throw std::logic_error("reversion of an exact series needs a truncation order");
    const Series t_var = variable(ctx_);
    const Series fprime = derivative();
    Series r = monomial(ctx_, Traits::inverse((*this)[1]), 1, std::min(2L, m));
    long known = std::min(2L, m);
    while (known < m) {
      const long next = std::min(2 * known, m);
      const Series rr = Series(ctx_, r.low_, r.coeffs_, next);
      const Series err = truncate(next).compose(rr) - t_var;
      const Series d = fprime.compose(rr);
      r = (rr - err * d.inverse(next)).truncate(next);
      known = next;
    }
    return r;
  }

  /// k/t + u'/u for f = t^k u with u(0) a unit.
  Series log_deriv() const {
    const long k = valuation();
    if (k >= trunc_) throw DomainError("log_deriv: series is zero to known order");
    const Series u = shift(-k);
    if (!Traits::is_unit(u[0])) throw DomainError("log_deriv: leading coefficient is not a unit");
    Series out = u.derivative() * u.inverse();
    if (k != 0) out = out + monomial(ctx_, Traits::from_rational(ctx_, k), -1);
    return out;
  }

  /// Caps every coefficient at absolute precision n (p-adic rings only).
  Series with_precision(long n) const {
    return map([&](const R& c) { return c.with_precision(n); });
  }

  /// Same truncation and coefficient-wise representation equality.
  friend bool operator==(const Series& a, const Series& b) {
    if (a.trunc_ != b.trunc_) return false;
    const long lo = std::min(a.low_, b.low_);
    const long hi = std::max(a.end(), b.end());
    for (long e = lo; e < hi; ++e)
      if (!(a[e] == b[e])) return false;
    return true;
  }

 private:
  void normalize_storage() {
    if (trunc_ < kInfinite && end() > trunc_) {
      const long keep = std::max(0L, trunc_ - low_);
      coeffs_.resize(static_cast<size_t>(keep), Traits::zero(ctx_));
    }
    while (!coeffs_.empty() && Traits::is_exact_zero(coeffs_.back())) coeffs_.pop_back();
    size_t lead = 0;
    while (lead < coeffs_.size() && Traits::is_exact_zero(coeffs_[lead])) ++lead;
    if (lead) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
      low_ += static_cast<long>(lead);
    }
    if (coeffs_.empty()) low_ = std::min(0L, trunc_);
  }

  Context ctx_{};
  long low_ = 0;
  long trunc_ = 0;
  std::vector<R> coeffs_;
};

using QSeries = Series<mpq_class>;
using PSeries = Series<Padic>;
using ESeries = Series<Eis>;

/// The lift sigma: coefficient Frobenius followed by t -> c t^p.
struct FrobeniusSpec {
  int p = 0;
  Padic c;
  /// Apply nu -> nu^p to coefficients (false: identity on coefficients).
  bool coefficient_frobenius = true;

  static FrobeniusSpec make(int p, const Padic& c, bool coefficient_frobenius = true);
};

inline Padic scale_by(const Padic& x, const Padic& s) { return x * s; }
inline Eis scale_by(const Eis& x, const Padic& s) { return x * s; }

/// f^sigma: coefficient Frobenius, then t -> c t^p. Only exponents below
/// trunc(f) are retained.
template <class R>
Series<R> substitute_sigma(const Series<R>& f, const FrobeniusSpec& sigma) {
  using Traits = RingTraits<R>;
  const long p = sigma.p;
  const long lo = f.low() * p;
  const long t = f.trunc();
  std::vector<R> out;
  Padic cinv;
  if (f.low() < 0) cinv = (sigma.c.is_exact() ? sigma.c.with_precision(f.context().prec) : sigma.c).inverse();
  for (long e = f.low(); e < f.end() && e * p < t; ++e) {
    const R ce = f[e];
    if (Traits::is_exact_zero(ce)) continue;
    const R img = sigma.coefficient_frobenius ? Traits::frobenius(ce) : ce;
    const size_t idx = static_cast<size_t>(e * p - lo);
    if (out.size() <= idx) out.resize(idx + 1, Traits::zero(f.context()));
    out[idx] = scale_by(img, e >= 0 ? sigma.c.pow(e) : cinv.pow(-e));
  }
  return Series<R>(f.context(), lo, std::move(out), t);
}

}  // namespace regkit
