#pragma once

#include <optional>
#include <string>
#include <vector>

#include "regkit/ratfunc.hpp"
#include "regkit/series.hpp"

namespace regkit {

/// Coefficients n < m of 2F1(1/3, 2/3; 1; t).
std::vector<mpq_class> hypergeometric_2f1_coeffs(long m);

/// F(t) = 1/(2 sqrt(-3)) * 2F1(1/3, 2/3; 1; t) = -(1 + 2 nu)/6 * 2F1, mod t^m.
ESeries hypergeometric_F(const PadicContext& ctx, long m);

/// p^-1 log(f^p / f^sigma) for f = t^k u with u a unit series.
template <class R>
Series<R> log_sigma(const Series<R>& f, const FrobeniusSpec& sigma);

/// sum_{n >= 1, p does not divide n} z^n / n^r mod z^m, exact.
QSeries polylog_series_exact(long r, int p, long m);
PSeries polylog_series(long r, const PadicContext& ctx, long m);

/// ln_r under x = 1/(1 - z), as a polynomial in x with p-adic coefficients.
///
/// The polynomial is the finite partial sum that is complete modulo
/// p^precision on the closed unit disk; truncated() drops degrees >= trunc_x.
struct PolylogXForm {
  int p = 0;
  long r = 0;
  long trunc_x = 0;
  /// Absolute precision guaranteed for every coefficient of the full polynomial.
  long precision = 0;
  /// Least valuation among the coefficients of degree >= trunc_x.
  long dropped_valuation = kInfinite;
  std::vector<Padic> coeffs;

  long degree() const { return static_cast<long>(coeffs.size()) - 1; }
  /// The series in x mod x^trunc_x.
  PSeries truncated() const;
  /// min(precision, dropped_valuation): precision of the x^trunc_x truncation
  /// as a function on the closed unit disk.
  long truncated_precision() const { return std::min(precision, dropped_valuation); }
  Padic value_at_one() const;
  Eis eval(const Eis& x) const;
  /// Composition with x = 1/(1 - z) as a series in z mod z^m.
  PSeries in_z(long m) const;
};

/// Builds ln_r (r >= 1) in the x-form, aiming for absolute precision n.
PolylogXForm polylog_xform(long r, int p, long n, long trunc_x);

/// ln_r(z) by evaluating the x-form at x = 1/(1 - z).
Eis polylog_eval_xform(long r, const Eis& z, long n);

struct PolylogLimit {
  Eis value;      ///< S_s with precision s - delta
  Eis raw;        ///< S_s at the working modulus
  Eis previous;   ///< S_(s-1) at the working modulus
  long s = 0;
  long delta = 0; ///< s - v(S_s - S_(s-1)), clamped to [0, s]
  long claimed_precision = 0;
  long working_precision = 0;
};

/// The limit formula (1 - z^(p^s))^-1 sum_{1 <= n < p^s, p does not divide n} z^n / n^r.
PolylogLimit polylog_eval(long r, const Eis& z, long s);

/// Largest s with p^s <= budget (at least 2).
long polylog_depth_for_budget(int p, long budget);

/// j(q) = E4^3 / Delta as a Laurent series with pole order 1, mod q^m.
QSeries j_q_expansion(long m);

struct PrintedCoefficient {
  long exponent = 0;
  mpq_class printed;
  mpq_class computed;
  bool match = false;
};

struct TatePeriod {
  QSeries q;   ///< in t Q[[t]], mod t^m
  QSeries q0;  ///< 27 q / t, mod t^(m - 1)
  std::vector<PrintedCoefficient> printed;
};

/// The q in t Q[[t]] with j(q(t)) = 27 (1 + 8t)^3 / (t (1 - t)^3), mod t^m.
TatePeriod tate_period(long m);

/// 27 (1 + 8t)^3 / (t (1 - t)^3) as a Laurent series mod t^m.
QSeries j_of_family(long m);

template <class R>
Series<R> to_padic_series(const QSeries& f, const PadicContext& ctx) {
  std::vector<R> cs;
  for (long e = f.low(); e < f.end(); ++e) cs.push_back(RingTraits<R>::from_rational(ctx, f[e]));
  return Series<R>(ctx, f.low(), std::move(cs), f.trunc());
}

// ---------------------------------------------------------------------------

template <class R>
Series<R> log_sigma(const Series<R>& f, const FrobeniusSpec& sigma) {
  using Traits = RingTraits<R>;
  const auto& ctx = f.context();
  const long k = f.valuation();
  if (k >= f.trunc()) throw DomainError("log_sigma: series is zero to known order");
  if (f.is_exact()) throw std::logic_error("log_sigma: argument needs a finite truncation order");
  const Series<R> u = f.shift(-k).with_precision(ctx.prec);
  if (!Traits::is_unit(u[0])) throw DomainError("log_sigma: argument is not a unit");
  Series<R> us = substitute_sigma(u, sigma);
  if (k != 0) {
    const Padic ck = sigma.c.pow(k);
    us = us.map([&](const R& c) { return scale_by(c, ck); });
  }
  const Series<R> ratio = u.pow(sigma.p) * us.inverse();
  const Series<R> x = Series<R>::one(ctx) - ratio;

  long w = kInfinite;
  for (long e = x.low(); e < x.end(); ++e) {
    const R c = x[e];
    if (Traits::is_exact_zero(c)) continue;
    if (!c.is_zero() && c.valuation() < 1) throw DomainError("log_sigma: f^p / f^sigma is not 1 mod p");
    w = std::min(w, c.valuation());
  }
  if (w >= kInfinite) return Series<R>(ctx, x.trunc());
  const long target = ctx.prec;
  long last = 0;
  for (long n = 1; n < 64 * (target + 3); ++n)
    if (n * w - valuation_of(n, sigma.p) - 1 < target) last = n;
  long tail = kInfinite;
  for (long n = last + 1; n <= last + 4 * sigma.p + 64; ++n)
    tail = std::min(tail, n * w - valuation_of(n, sigma.p) - 1);

  Series<R> acc(ctx, x.trunc());
  Series<R> xn = Series<R>::one(ctx);
  for (long n = 1; n <= last; ++n) {
    xn = xn * x;
    if (xn.valuation() >= acc.trunc()) break;
    acc = acc + xn.div_int(n);
  }
  return acc.div_int(-sigma.p).with_precision(tail);
}

}  // namespace regkit
