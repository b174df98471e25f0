#include "doctest.h"
#include "regkit/curve.hpp"

#include <random>

using namespace regkit;

namespace {

const RatFunc t = RatFunc::t();

RatFunc three_over_t_minus_1() { return RatFunc(3L) / (t - RatFunc(1L)); }

long multiplicity(const std::vector<DivisorTerm>& d, Place place) {
  for (const auto& term : d)
    if (term.place == place) return term.multiplicity;
  return 0;
}

CurveFunction monomial(long e1, long e2, long ex, const mpq_class& scale) {
  return CurveFunction::constant(scale) * symbol_h1().pow(e1) * symbol_h2().pow(e2) * CurveFunction::x().pow(ex);
}

}  // namespace

TEST_CASE("curve arithmetic reduces y^2") {
  const CurveFunction y = CurveFunction::y();
  CHECK(y * y == CurveFunction(XRat(curve_rhs())));
  const CurveFunction h = symbol_h1();
  CHECK(h * h.inverse() == CurveFunction::constant(RatFunc(1L)));
  // h1 h2 = x^3 / (-64 (1 - t)^2)
  const RatFunc s = RatFunc(-64L) * (RatFunc(1L) - t).pow(2);
  CHECK(symbol_h1() * symbol_h2() == CurveFunction::x().pow(3) * CurveFunction::constant(s.inverse()));
}

TEST_CASE("place expansions satisfy the curve equation") {
  for (Place place : handled_places()) {
    CAPTURE(to_string(place));
    const PlaceExpansion e = expansion_at(place, 20);
    const RSeries lhs = e.y * e.y;
    const RSeries rhs = e.expand(XRat(curve_rhs()));
    const RSeries diff = lhs - rhs;
    const long m = std::min(diff.trunc(), 12L);
    for (long k = diff.low(); k < m; ++k) CHECK(diff[k].is_zero());
  }
  CHECK(expansion_at(Place::Infinity).expand(CurveFunction::x() / CurveFunction::y()).valuation() == 1);
  CHECK(local_value(CurveFunction::x(), Place::Infinity).order == -2);
  CHECK(local_value(CurveFunction::y(), Place::Infinity).order == -3);
}

TEST_CASE("divisors of the symbol entries") {
  const auto d1 = divisor(symbol_h1());
  CHECK(multiplicity(d1, Place::TorsionPlus) == 3);
  CHECK(multiplicity(d1, Place::TorsionMinus) == 0);
  CHECK(multiplicity(d1, Place::Infinity) == -3);
  const auto d2 = divisor(symbol_h2());
  CHECK(multiplicity(d2, Place::TorsionPlus) == 0);
  CHECK(multiplicity(d2, Place::TorsionMinus) == 3);
  CHECK(multiplicity(d2, Place::Infinity) == -3);
  const auto dx = divisor(CurveFunction::x());
  CHECK(multiplicity(dx, Place::TorsionPlus) == 1);
  CHECK(multiplicity(dx, Place::Infinity) == -2);
  CHECK_THROWS_AS(divisor(CurveFunction::y()), UnsupportedPlace);
  CHECK_THROWS_AS(divisor(CurveFunction::x() - CurveFunction::constant(RatFunc(1L))), UnsupportedPlace);
}

TEST_CASE("tame symbols of (h1, h2) are trivial") {
  for (Place place : handled_places()) {
    CAPTURE(to_string(place));
    CHECK(tame_symbol(symbol_h1(), symbol_h2(), place) == RatFunc(1L));
  }
  CHECK(local_value(symbol_h2(), Place::TorsionPlus).leading == RatFunc(1L));
  CHECK(local_value(symbol_h1(), Place::TorsionMinus).leading == RatFunc(1L));
  const LocalValue a = local_value(symbol_h1(), Place::Infinity);
  const LocalValue b = local_value(symbol_h2(), Place::Infinity);
  CHECK(a.leading / b.leading == RatFunc(-1L));
}

TEST_CASE("dlog reduction") {
  const auto [cw, ce] = dlog_reduce(symbol_h1(), symbol_h2());
  CHECK(cw == three_over_t_minus_1());
  CHECK(ce.is_zero());
  const auto [fw, fe] = dlog_reduce(symbol_h1(), symbol_h1());
  CHECK(fw.is_zero());
  CHECK(fe.is_zero());
  const auto [lw, le] = dlog_reduce(symbol_h2(), CurveFunction::constant(RatFunc(mpq_class(-5, 3))));
  CHECK(lw.is_zero());
  CHECK(le.is_zero());
}

TEST_CASE("dlog reduction is bilinear and antisymmetric on monomials") {
  std::mt19937 rng(7);
  auto small = [&] { return static_cast<long>(rng() % 5) - 2; };
  for (int trial = 0; trial < 6; ++trial) {
    const long a = small(), b = small(), c = small(), d = small();
    CAPTURE(a);
    CAPTURE(b);
    CAPTURE(c);
    CAPTURE(d);
    const CurveFunction f = monomial(a, b, 0, mpq_class(1 + trial) / 2);
    const CurveFunction g = monomial(c, d, 0, mpq_class(-3) / (1 + trial));
    const auto fg = dlog_reduce(f, g);
    const auto gf = dlog_reduce(g, f);
    CHECK(fg.first == three_over_t_minus_1() * RatFunc(a * d - b * c));
    CHECK(fg.second.is_zero());
    CHECK((fg.first + gf.first).is_zero());
    CHECK((fg.second + gf.second).is_zero());
  }
}

TEST_CASE("Steinberg relation at the dlog level") {
  for (const CurveFunction& f : {symbol_h1(), symbol_h2() * CurveFunction::constant(RatFunc(2L)),
                                 CurveFunction::x() * CurveFunction::constant(RatFunc(mpq_class(1, 3)))}) {
    const CurveFunction g = CurveFunction::constant(RatFunc(1L)) - f;
    const auto [w, e] = dlog_reduce(f, g);
    CHECK(w.is_zero());
    CHECK(e.is_zero());
  }
}

TEST_CASE("Weil reciprocity on supported functions") {
  std::mt19937 rng(11);
  auto small = [&] { return static_cast<long>(rng() % 5) - 2; };
  for (int trial = 0; trial < 8; ++trial) {
    const CurveFunction f = monomial(small(), small(), small(), mpq_class(trial + 1));
    const CurveFunction g = monomial(small(), small(), small(), mpq_class(-1) / (trial + 2)) *
                            CurveFunction::constant(RatFunc(1L) + t);
    RatFunc prod(1L);
    for (Place place : handled_places()) prod = prod * tame_symbol(f, g, place);
    CHECK(prod == RatFunc(1L));
  }
}

TEST_CASE("nonconstant tame symbols are refused") {
  try {
    dlog_reduce(CurveFunction::x(), symbol_h1());
    FAIL("expected a refusal");
  } catch (const NontrivialTameSymbol& err) {
    CHECK(err.place == Place::TorsionPlus);
  }
  CHECK_THROWS_AS(dlog_reduce(symbol_h1(), CurveFunction::constant(t)), NontrivialTameSymbol);
}
