#pragma once

#include <string>
#include <utility>
#include <vector>

#include "regkit/ratfunc.hpp"
#include "regkit/series.hpp"

namespace regkit {

// Function field of y^2 = x^3 + (3x + 4(1 - t))^2 over Q(t).

/// Element num/den of Q(t)(x) with den monic. Common powers of x and of the
/// curve cubic are cancelled on construction; reduced() gives lowest terms.
class XRat {
 public:
  XRat() : den_(RatFunc(1L)) {}
  XRat(const RatFunc& c) : num_(c), den_(RatFunc(1L)) {}  // NOLINT(google-explicit-constructor)
  XRat(XPoly num) : num_(std::move(num)), den_(RatFunc(1L)) {}  // NOLINT(google-explicit-constructor)
  XRat(XPoly num, XPoly den);

  static XRat x() { return XRat(XPoly::x()); }

  const XPoly& num() const { return num_; }
  const XPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  XRat reduced() const;

  friend XRat operator+(const XRat& a, const XRat& b);
  friend XRat operator-(const XRat& a, const XRat& b) { return a + (-b); }
  XRat operator-() const;
  friend XRat operator*(const XRat& a, const XRat& b);
  friend XRat operator/(const XRat& a, const XRat& b) { return a * b.inverse(); }
  XRat inverse() const;

  XRat d_dx() const;
  /// Partial derivative in t with x held fixed.
  XRat d_dt() const;

  friend bool operator==(const XRat& a, const XRat& b) { return a.num_ * b.den_ == b.num_ * a.den_; }
  std::string to_string() const;

 private:
  XPoly num_, den_;
};

/// x^3 + (3x + 4(1 - t))^2.
XPoly curve_rhs();

/// a(x) + b(x) y.
class CurveFunction {
 public:
  CurveFunction() = default;
  CurveFunction(XRat a, XRat b = XRat()) : a_(std::move(a)), b_(std::move(b)) {}  // NOLINT(google-explicit-constructor)

  static CurveFunction x() { return {XRat::x()}; }
  static CurveFunction y() { return {XRat(), XRat(RatFunc(1L))}; }
  static CurveFunction constant(const RatFunc& c) { return {XRat(c)}; }

  const XRat& a() const { return a_; }
  const XRat& b() const { return b_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  friend CurveFunction operator+(const CurveFunction& f, const CurveFunction& g);
  friend CurveFunction operator-(const CurveFunction& f, const CurveFunction& g);
  CurveFunction operator-() const { return {-a_, -b_}; }
  friend CurveFunction operator*(const CurveFunction& f, const CurveFunction& g);
  friend CurveFunction operator/(const CurveFunction& f, const CurveFunction& g) { return f * g.inverse(); }
  CurveFunction inverse() const;
  CurveFunction pow(long e) const;

  /// a^2 - b^2 f, the norm to Q(t)(x).
  XRat norm() const;

  /// Derivations of the function field: d/dx at fixed t and d/dt at fixed x.
  CurveFunction d_dx() const;
  CurveFunction d_dt() const;

  friend bool operator==(const CurveFunction& f, const CurveFunction& g) { return f.a_ == g.a_ && f.b_ == g.b_; }
  std::string to_string() const;

 private:
  XRat a_, b_;
};

/// (y - 3x - 4(1 - t)) / (-8(1 - t)).
CurveFunction symbol_h1();
/// (y + 3x + 4(1 - t)) / (8(1 - t)).
CurveFunction symbol_h2();

enum class Place { TorsionPlus, TorsionMinus, Infinity };

/// "(0, 4(1-t))", "(0, -4(1-t))", "inf".
std::string to_string(Place place);
std::vector<Place> handled_places();

struct UnsupportedPlace : DomainError {
  using DomainError::DomainError;
};

struct NontrivialTameSymbol : DomainError {
  NontrivialTameSymbol(const std::string& what, Place where) : DomainError(what), place(where) {}
  Place place;
};

/// Laurent expansions of x and y in a local parameter at a place.
struct PlaceExpansion {
  Place place = Place::Infinity;
  std::string parameter;  ///< "x" at the torsion points, "x/y" at infinity
  RSeries x, y;

  RSeries expand(const CurveFunction& f) const;
  RSeries expand(const XRat& f) const;
};

/// Expansion with coefficients known mod parameter^order.
PlaceExpansion expansion_at(Place place, long order = 24);  // cached

/// Order of vanishing and leading coefficient at a place.
struct LocalValue {
  long order = 0;
  RatFunc leading;
};

LocalValue local_value(const CurveFunction& f, Place place);

struct DivisorTerm {
  Place place;
  long multiplicity;
};

/// Divisor of a nonzero function supported on the handled places.
std::vector<DivisorTerm> divisor(const CurveFunction& h);

/// (-1)^(ord f ord g) (f^ord g / g^ord f) restricted to the place.
RatFunc tame_symbol(const CurveFunction& f, const CurveFunction& g, Place place);

/// df/f ^ dg/g = dt ^ alpha with alpha = c_omega dx/y + c_eta x dx/y modulo
/// exact relative forms. Refuses when a tame symbol at a handled place is not
/// constant in t.
std::pair<RatFunc, RatFunc> dlog_reduce(const CurveFunction& f, const CurveFunction& g);

}  // namespace regkit
