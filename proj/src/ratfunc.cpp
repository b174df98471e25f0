#include "regkit/ratfunc.hpp"

#include <sstream>

namespace regkit {

std::string to_string(const QPoly& f, const std::string& var) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long d = f.degree(); d >= 0; --d) {
    const mpq_class c = f.coeff(d);
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    const mpq_class a = abs(c);
    if (d == 0 || a != 1) os << a.get_str() << (d > 0 ? "*" : "");
    if (d >= 1) os << var;
    if (d >= 2) os << "^" << d;
    first = false;
  }
  return os.str();
}

RatFunc::RatFunc(QPoly num, QPoly den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = QPoly();
    den_ = QPoly(mpq_class(1));
    return;
  }
  QPoly g = QPoly::gcd(num, den);
  num = num / g;
  den = den / g;
  const mpq_class lc = den.lead();
  num_ = num.scale(1 / lc);
  den_ = den.scale(1 / lc);
}

mpq_class RatFunc::constant_value() const {
  if (!is_constant()) throw DomainError("rational function is not constant");
  return num_.coeff(0) / den_.coeff(0);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.den_.degree() == 0 && b.den_.degree() == 0) return {a.num_ * b.num_, QPoly(mpq_class(1)), RatFunc::Normalized{}};
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DomainError("inverse of the zero rational function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  return {num_.pow(e), den_.pow(e), Normalized{}};
}

RatFunc RatFunc::derivative() const {
  return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

mpq_class RatFunc::operator()(const mpq_class& t) const {
  const mpq_class d = den_(t);
  if (d == 0) throw DomainError("rational function evaluated at a pole");
  return num_(t) / d;
}

std::string RatFunc::to_string() const {
  if (den_.degree() == 0) return regkit::to_string(num_);
  return "(" + regkit::to_string(num_) + ")/(" + regkit::to_string(den_) + ")";
}

std::string to_string(const XPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long d = f.degree(); d >= 0; --d) {
    const RatFunc& c = f.coeffs()[static_cast<size_t>(d)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << c.to_string() << ")";
    if (d >= 1) os << "*x";
    if (d >= 2) os << "^" << d;
    first = false;
  }
  return os.str();
}

}  // namespace regkit
