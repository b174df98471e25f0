#include "regkit/curve.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace regkit {

namespace {

RatFunc one_minus_t() { return RatFunc(1L) - RatFunc::t(); }

XPoly dt_poly(const XPoly& p) {
  std::vector<RatFunc> cs;
  for (const auto& c : p.coeffs()) cs.push_back(c.derivative());
  return XPoly(std::move(cs));
}

bool is_x_power(const XPoly& p) { return !p.is_zero() && p.low_degree() == p.degree(); }

XPoly shift_down(const XPoly& p, long k) {
  std::vector<RatFunc> cs(p.coeffs().begin() + k, p.coeffs().end());
  return XPoly(std::move(cs));
}

XPoly shift_up(const XPoly& p, long k) {
  std::vector<RatFunc> cs(static_cast<size_t>(k), RatFunc());
  cs.insert(cs.end(), p.coeffs().begin(), p.coeffs().end());
  return XPoly(std::move(cs));
}

}  // namespace

// ------------------------------------------------------------------ XRat

XRat::XRat(XPoly num, XPoly den) {
  if (den.is_zero()) throw DomainError("XRat: zero denominator");
  if (num.is_zero()) {
    num_ = XPoly();
    den_ = XPoly(RatFunc(1L));
    return;
  }
  // Only powers of x and of the curve cubic are cancelled; every denominator
  // that arises from the supported functions and their derivatives is of that
  // form. reduced() runs the full gcd.
  const long k = std::min(num.low_degree(), den.low_degree());
  if (k > 0) {
    num = shift_down(num, k);
    den = shift_down(den, k);
  }
  if (den.degree() >= 3) {
    const XPoly rhs = curve_rhs();
    while (den.degree() >= 3 && num.degree() >= 3) {
      auto [qd, rd] = XPoly::divmod(den, rhs);
      if (!rd.is_zero()) break;
      auto [qn, rn] = XPoly::divmod(num, rhs);
      if (!rn.is_zero()) break;
      num = std::move(qn);
      den = std::move(qd);
    }
  }
  const RatFunc inv_lead = den.lead().inverse();
  num_ = num.scale(inv_lead);
  den_ = den.scale(inv_lead);
}

XRat XRat::reduced() const {
  if (is_zero()) return *this;
  const XPoly g = XPoly::gcd(num_, den_);
  return XRat(num_ / g, den_ / g);
}

XRat operator+(const XRat& a, const XRat& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return XRat(a.num_ + b.num_, a.den_);
  if (is_x_power(a.den_) && is_x_power(b.den_)) {
    const long da = a.den_.degree(), db = b.den_.degree();
    const long d = std::max(da, db);
    return XRat(shift_up(a.num_, d - da) + shift_up(b.num_, d - db), shift_up(XPoly(RatFunc(1L)), d));
  }
  return XRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

XRat XRat::operator-() const {
  XRat r = *this;
  r.num_ = -num_;
  return r;
}

XRat operator*(const XRat& a, const XRat& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return XRat(a.num_ * b.num_, a.den_ * b.den_);
}

XRat XRat::inverse() const {
  if (is_zero()) throw DomainError("XRat: inverse of zero");
  return XRat(den_, num_);
}

XRat XRat::d_dx() const { return XRat(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_); }

XRat XRat::d_dt() const { return XRat(dt_poly(num_) * den_ - num_ * dt_poly(den_), den_ * den_); }

std::string XRat::to_string() const {
  if (den_.degree() == 0) return regkit::to_string(num_);
  return "(" + regkit::to_string(num_) + ")/(" + regkit::to_string(den_) + ")";
}

// --------------------------------------------------------- CurveFunction

XPoly curve_rhs() {
  const XPoly x = XPoly::x();
  const XPoly lin = x.scale(RatFunc(3L)) + XPoly(one_minus_t() * RatFunc(4L));
  return x * x * x + lin * lin;
}

CurveFunction operator+(const CurveFunction& f, const CurveFunction& g) { return {f.a_ + g.a_, f.b_ + g.b_}; }
CurveFunction operator-(const CurveFunction& f, const CurveFunction& g) { return {f.a_ - g.a_, f.b_ - g.b_}; }

CurveFunction operator*(const CurveFunction& f, const CurveFunction& g) {
  const XRat rhs(curve_rhs());
  return {f.a_ * g.a_ + f.b_ * g.b_ * rhs, f.a_ * g.b_ + f.b_ * g.a_};
}

XRat CurveFunction::norm() const { return a_ * a_ - b_ * b_ * XRat(curve_rhs()); }

CurveFunction CurveFunction::inverse() const {
  const XRat n = norm();
  if (n.is_zero()) throw DomainError("CurveFunction: inverse of zero");
  return {a_ / n, -b_ / n};
}

CurveFunction CurveFunction::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CurveFunction r(XRat(RatFunc(1L)));
  CurveFunction base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

// d(b y) = b' y + b f'/(2y) = (b' + b f'/(2f)) y, for either derivation.
CurveFunction CurveFunction::d_dx() const {
  const XRat f(curve_rhs());
  return {a_.d_dx(), b_.d_dx() + b_ * f.d_dx() / (f * XRat(RatFunc(2L)))};
}

CurveFunction CurveFunction::d_dt() const {
  const XRat f(curve_rhs());
  return {a_.d_dt(), b_.d_dt() + b_ * f.d_dt() / (f * XRat(RatFunc(2L)))};
}

std::string CurveFunction::to_string() const { return "[" + a_.to_string() + "] + [" + b_.to_string() + "]*y"; }

CurveFunction symbol_h1() {
  const XPoly lin = XPoly::x().scale(RatFunc(3L)) + XPoly(one_minus_t() * RatFunc(4L));
  const RatFunc scale = (one_minus_t() * RatFunc(-8L)).inverse();
  return {XRat(-lin.scale(scale)), XRat(scale)};
}

CurveFunction symbol_h2() {
  const XPoly lin = XPoly::x().scale(RatFunc(3L)) + XPoly(one_minus_t() * RatFunc(4L));
  const RatFunc scale = (one_minus_t() * RatFunc(8L)).inverse();
  return {XRat(lin.scale(scale)), XRat(scale)};
}

// ---------------------------------------------------------------- places

std::string to_string(Place place) {
  switch (place) {
    case Place::TorsionPlus: return "(0, 4(1-t))";
    case Place::TorsionMinus: return "(0, -4(1-t))";
    case Place::Infinity: return "inf";
  }
  return "?";
}

std::vector<Place> handled_places() { return {Place::TorsionPlus, Place::TorsionMinus, Place::Infinity}; }

namespace {

RSeries constant_series(const RatFunc& c, long m) { return RSeries::constant(NoContext{}, c, m); }

RSeries eval_poly(const XPoly& p, const RSeries& at, long m) {
  RSeries acc(NoContext{}, m);
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    acc = (acc * at + constant_series(*it, m)).truncate(m);
  return acc;
}

/// sqrt(1 + u) for u with u(0) = 0, by the binomial series.
RSeries sqrt_one_plus(const RSeries& u, long m) {
  RSeries acc = RSeries::one(NoContext{}).truncate(m);
  RSeries power = acc;
  mpq_class binom = 1;
  for (long k = 1; k < m; ++k) {
    power = (power * u).truncate(m);
    if (power.valuation() >= m) break;
    binom = binom * (mpq_class(1, 2) - (k - 1)) / k;
    acc = acc + power * RatFunc(binom);
  }
  return acc;
}

}  // namespace

RSeries PlaceExpansion::expand(const XRat& f) const {
  const long m = x.trunc();
  const RSeries num = eval_poly(f.num(), x, m);
  const RSeries den = eval_poly(f.den(), x, m);
  return num * den.inverse();
}

RSeries PlaceExpansion::expand(const CurveFunction& f) const {
  RSeries out = expand(f.a());
  if (!f.b().is_zero()) out = out + expand(f.b()) * y;
  return out;
}

namespace {

PlaceExpansion compute_expansion(Place place, long order) {
  const NoContext ctx;
  PlaceExpansion e;
  e.place = place;
  const RatFunc c = one_minus_t();
  if (place != Place::Infinity) {
    // y = +-(3x + 4(1-t)) sqrt(1 + x^3 / (3x + 4(1-t))^2)
    e.parameter = "x";
    e.x = RSeries::variable(ctx).truncate(order);
    const RSeries lin = RSeries(ctx, 0, {c * RatFunc(4L), RatFunc(3L)}, order);
    const RSeries u = RSeries::monomial(ctx, RatFunc(1L), 3, order) * (lin * lin).inverse();
    e.y = lin * sqrt_one_plus(u, order);
    if (place == Place::TorsionMinus) e.y = -e.y;
    return e;
  }
  // s = x/y; z = 1/x solves z = s^2 / (1 - 9 s^2 - 24(1-t) s^2 z - 16(1-t)^2 s^2 z^2).
  e.parameter = "x/y";
  const long work = order + 6;
  const RSeries s2 = RSeries::monomial(ctx, RatFunc(1L), 2, work);
  RSeries z = s2;
  for (long known = 2; known < work; known += 2) {
    const RSeries den = RSeries::one(ctx) - s2 * RatFunc(9L) - s2 * z * (c * RatFunc(24L)) -
                        s2 * z * z * (c * c * RatFunc(16L));
    z = (s2 * den.inverse()).truncate(work);
  }
  e.x = z.inverse().truncate(order);
  e.y = (e.x * RSeries::monomial(ctx, RatFunc(1L), -1)).truncate(order - 1);
  e.x = e.x.truncate(order - 1);
  return e;
}

}  // namespace

PlaceExpansion expansion_at(Place place, long order) {
  static std::mutex mutex;
  static std::map<std::pair<Place, long>, PlaceExpansion> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find({place, order});
  if (it == cache.end()) it = cache.emplace(std::make_pair(place, order), compute_expansion(place, order)).first;
  return it->second;
}

LocalValue local_value(const CurveFunction& f, Place place) {
  if (f.is_zero()) throw DomainError("local_value: zero function");
  for (long order : {16L, 32L, 64L}) {
    const RSeries s = expansion_at(place, order).expand(f);
    const long v = s.valuation();
    if (v < s.trunc()) return {v, s[v]};
  }
  throw DomainError("local_value: function vanishes to the expansion order at " + to_string(place));
}

std::vector<DivisorTerm> divisor(const CurveFunction& h) {
  if (h.is_zero()) throw DomainError("divisor of the zero function");
  const XRat n = h.norm().reduced();
  const XRat a = h.a().reduced();
  const XRat b = h.b().reduced();
  for (const XPoly* p : {&n.num(), &n.den(), &a.den(), &b.den()}) {
    if (is_x_power(*p)) continue;
    XPoly rest = *p;
    while (rest.coeff(0).is_zero()) rest = rest / XPoly::x();
    throw UnsupportedPlace("unsupported place: points above the roots of " + to_string(rest.monic()));
  }
  std::vector<DivisorTerm> out;
  long degree = 0;
  for (Place place : handled_places()) {
    const long ord = local_value(h, place).order;
    degree += ord;
    if (ord != 0) out.push_back({place, ord});
  }
  if (degree != 0) throw std::logic_error("divisor: degree " + std::to_string(degree) + " is not zero");
  return out;
}

RatFunc tame_symbol(const CurveFunction& f, const CurveFunction& g, Place place) {
  const LocalValue lf = local_value(f, place);
  const LocalValue lg = local_value(g, place);
  RatFunc out = lf.leading.pow(lg.order) * lg.leading.pow(-lf.order);
  if ((lf.order * lg.order) % 2 != 0) out = -out;
  return out;
}

std::pair<RatFunc, RatFunc> dlog_reduce(const CurveFunction& f, const CurveFunction& g) {
  for (Place place : handled_places()) {
    const RatFunc sym = tame_symbol(f, g, place);
    if (!sym.is_constant())
      throw NontrivialTameSymbol(
          "dlog_reduce: tame symbol " + sym.to_string() + " at " + to_string(place) + " is not constant in t",
          place);
  }
  // df/f ^ dg/g = psi dx ^ dt = dt ^ (-psi dx)
  const CurveFunction psi = (f.d_dx() * g.d_dt() - f.d_dt() * g.d_dx()) / (f * g);
  XRat even = -psi.a();
  XRat odd = -psi.b() * XRat(curve_rhs());  // b y dx = b f dx/y
  if (!is_x_power(even.den())) even = even.reduced();
  if (!is_x_power(odd.den())) odd = odd.reduced();

  for (const XRat* part : {&even, &odd})
    if (!is_x_power(part->den()))
      throw UnsupportedPlace("dlog_reduce: form has poles off the handled places");

  auto laurent = [](const XRat& r) {
    std::map<long, RatFunc> out;
    const long shift = r.den().degree();
    for (long d = 0; d <= r.num().degree(); ++d)
      if (!r.num().coeff(d).is_zero()) out[d - shift] = r.num().coeff(d);
    return out;
  };

  const auto even_terms = laurent(even);
  if (auto it = even_terms.find(-1); it != even_terms.end())
    throw DomainError("dlog_reduce: the even part has residue " + it->second.to_string() + " at x = 0");

  // Reduce R(x) dx/y with d(x^k y) = (k x^(k-1) f + f'/2 x^k) dx/y.
  auto terms = laurent(odd);
  const XPoly rhs = curve_rhs();
  const XPoly drhs = rhs.derivative();
  auto subtract_exact = [&](long k, const RatFunc& scale) {
    // scale * d(x^k y) as a Laurent polynomial.
    for (long d = 0; d <= rhs.degree(); ++d)
      if (!rhs.coeff(d).is_zero()) terms[k - 1 + d] = terms[k - 1 + d] - scale * RatFunc(k) * rhs.coeff(d);
    for (long d = 0; d <= drhs.degree(); ++d)
      if (!drhs.coeff(d).is_zero())
        terms[k + d] = terms[k + d] - scale * RatFunc(mpq_class(1, 2)) * drhs.coeff(d);
  };
  while (!terms.empty() && terms.begin()->first <= -2) {
    const auto [e, c] = *terms.begin();
    if (!c.is_zero()) {
      const long k = e + 1;  // lowest term of d(x^k y) is k f(0) x^(k-1)
      subtract_exact(k, c / (RatFunc(k) * rhs.coeff(0)));
    }
    terms.erase(e);
  }
  while (!terms.empty() && terms.rbegin()->first >= 2) {
    const auto [e, c] = *terms.rbegin();
    if (!c.is_zero()) {
      const long k = e - 2;  // leading term of d(x^k y) is (k + 3/2) x^(k+2)
      subtract_exact(k, c / RatFunc(mpq_class(2 * k + 3, 2)));
    }
    terms.erase(e);
  }
  if (auto it = terms.find(-1); it != terms.end() && !it->second.is_zero())
    throw DomainError("dlog_reduce: the odd part has residue " + it->second.to_string() + " at x = 0");
  return {terms.count(0) ? terms[0] : RatFunc(), terms.count(1) ? terms[1] : RatFunc()};
}

}  // namespace regkit
