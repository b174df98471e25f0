#include "doctest.h"
#include "regkit/special.hpp"

#include <random>

using namespace regkit;

namespace {

Eis eis_mod(int p, long a, long b, long w) {
  return Eis(Padic::from_rational(p, mpq_class(a), w), Padic::from_rational(p, mpq_class(b), w));
}

}  // namespace

TEST_CASE("2F1 coefficients") {
  auto a = hypergeometric_2f1_coeffs(5);
  CHECK(a[0] == 1);
  CHECK(a[1] == mpq_class(2, 9));
  CHECK(a[2] == mpq_class(10, 81));
  CHECK(a[3] == mpq_class(560, 6561));
}

TEST_CASE("2F1 satisfies its differential equation") {
  const long m = 30;
  const NoContext q{};
  QSeries f = QSeries::from_rationals(q, hypergeometric_2f1_coeffs(m), m);
  QSeries t = QSeries::variable(q);
  QSeries one = QSeries::one(q);
  QSeries lhs = t * (one - t) * f.derivative().derivative() + (one - t.mul_int(2)) * f.derivative() -
                f * mpq_class(2, 9);
  CHECK(lhs.trunc() >= m - 2);
  for (long e = 0; e < m - 2; ++e) CHECK(lhs[e] == 0);
}

TEST_CASE("F carries the factor 1/(2 sqrt(-3))") {
  PadicContext ctx{7, 8};
  ESeries F = hypergeometric_F(ctx, 6);
  Eis two_s = Eis::sqrt_minus_3(7).mul_int(2);
  CHECK((F[0] * two_s).equals_mod(Eis::from_int(7, 1), 8));
}

TEST_CASE("polylog_series") {
  const int p = 5;
  const long m = 40;
  const NoContext q{};
  QSeries ln0 = polylog_series_exact(0, p, m);
  QSeries one = QSeries::one(q);
  QSeries z = QSeries::variable(q);
  QSeries closed = (one - z).inverse(m) - (one - z.pow(p)).inverse(m);
  for (long e = 0; e < m; ++e) CHECK(ln0[e] == closed[e]);

  CHECK(polylog_series_exact(1, p, m)[5] == 0);

  for (long r = -3; r <= 3; ++r) {
    QSeries lhs = polylog_series_exact(r + 1, p, m).derivative() * z;
    QSeries rhs = polylog_series_exact(r, p, m);
    for (long e = 0; e < m - 1; ++e) CHECK(lhs[e] == rhs[e]);
  }
  QSeries iter = ln0;
  for (long r = 1; r <= 3; ++r) {
    iter = iter.derivative() * z;
    QSeries target = polylog_series_exact(-r, p, m);
    for (long e = 0; e < m - r; ++e) CHECK(iter[e] == target[e]);
  }
}

TEST_CASE("polylog limit formula at r = 0 matches the closed form") {
  PolylogLimit v = polylog_eval(0, Eis::from_int(5, 2), 4);
  Padic expected = Padic::from_rational(5, mpq_class(-30, 31), 10);
  CHECK(v.value.a().equals_mod(expected, v.claimed_precision));
  CHECK(v.value.b().is_zero());
}

TEST_CASE("polylog limit formula reproduces frozen values of ln_2(-nu)") {
  struct Case {
    int p;
    long s, w;
    long a, b;
  };
  const Case cases[] = {{7, 6, 10, 103027627, 146289562},
                        {5, 6, 10, 6736676, 6801477},
                        {13, 5, 9, 2617201776L, 10086831769L}};
  for (const auto& c : cases) {
    PolylogLimit v = polylog_eval(2, Eis::from_int(c.p, 0, -1), c.s);
    CHECK(v.delta == 1);
    CHECK(v.claimed_precision == c.s - 1);
    CHECK(v.raw.equals_mod(eis_mod(c.p, c.a, c.b, c.w), v.working_precision));
  }
}

TEST_CASE("polylog_eval rejects the bad residue disk") {
  CHECK_THROWS_AS(polylog_eval(2, Eis::from_int(7, 8), 3), DomainError);
  CHECK_THROWS_AS(polylog_eval_xform(2, Eis::from_int(7, 1), 5), DomainError);
}

TEST_CASE("x-form evaluation agrees with the limit formula") {
  PolylogLimit lim = polylog_eval(2, Eis::from_int(7, 0, -1), 7);
  Eis xf = polylog_eval_xform(2, Eis::from_int(7, 0, -1), 8);
  CHECK(xf.precision() >= 8);
  CHECK(xf.equals_mod(eis_mod(7, 179146530, 1917259959, 11), 6));
  CHECK(xf.equals_mod(lim.value, lim.claimed_precision));
}

TEST_CASE("x-form divisibility and substitution") {
  for (int p : {5, 7}) {
    for (long r : {1L, 2L, 3L}) {
      PolylogXForm f = polylog_xform(r, p, 8, 40);
      CHECK(f.precision >= 8);
      CHECK(f.coeffs[0].is_zero());
      CHECK(f.value_at_one().is_zero());
      if (p == 5 && r == 1) CHECK(f.truncated_precision() >= 8);
    }
  }
  PolylogXForm f2 = polylog_xform(2, 7, 8, 40);
  PSeries in_z = f2.in_z(20);
  PSeries direct = polylog_series(2, PadicContext{7, 8}, 20);
  for (long e = 0; e < 20; ++e) CHECK(in_z[e].equals_mod(direct[e], 8));
}

TEST_CASE("log_sigma of 1 - t") {
  PadicContext ctx{5, 7};
  FrobeniusSpec s = FrobeniusSpec::make(5, Padic::from_int(5, 1));
  PSeries f = PSeries::from_rationals(ctx, {1, -1}, 12);
  PSeries l = log_sigma(f, s);
  const long expected[] = {0, 15624, 7812, 5208, 3906, 0, 2604, 2232, 1953, 1736, 0, 12784};
  for (long e = 0; e < 12; ++e) CHECK(l[e].equals_mod(Padic::from_int(5, expected[e]), 6));
}

TEST_CASE("log_sigma is additive and kills Teichmueller constants") {
  std::mt19937 rng(17);
  PadicContext ctx{7, 8};
  FrobeniusSpec s = FrobeniusSpec::make(7, Padic::from_rational(7, 8, 8));
  for (int k = 0; k < 4; ++k) {
    std::vector<mpq_class> a, b;
    for (int i = 0; i < 15; ++i) {
      a.emplace_back(static_cast<long>(rng() % 97) - 48);
      b.emplace_back(static_cast<long>(rng() % 97) - 48);
    }
    a[0] = 3;
    b[0] = 1 + 7 * static_cast<long>(rng() % 5);
    ESeries f = ESeries::from_rationals(ctx, a, 15), g = ESeries::from_rationals(ctx, b, 15);
    f = f + ESeries::monomial(ctx, Eis::nu(7), 2);
    ESeries lhs = log_sigma(f * g, s), rhs = log_sigma(f, s) + log_sigma(g, s);
    for (long e = 0; e < 15; ++e) CHECK(lhs[e].equals_mod(rhs[e], 6));
  }
  // The Teichmueller lift of 2 in Z_7 is fixed by x -> x^7.
  Padic omega = hensel_root({0, -1, 0, 0, 0, 0, 0, 1}, 2, 7, 8);
  PSeries c = PSeries::constant(PadicContext{7, 8}, omega, 10);
  CHECK(log_sigma(c, FrobeniusSpec::make(7, Padic::from_int(7, 1))).is_zero());
}

TEST_CASE("j-invariant q-expansion") {
  QSeries j = j_q_expansion(5);
  CHECK(j.pole_order() == 1);
  CHECK(j[-1] == 1);
  CHECK(j[0] == 744);
  CHECK(j[1] == 196884);
  CHECK(j[2] == 21493760);
}

TEST_CASE("Tate period") {
  TatePeriod tp = tate_period(32);
  CHECK(tp.q[1] == mpq_class(1, 27));
  CHECK(tp.q[2] == mpq_class(5, 243));
  CHECK(tp.q[3] == mpq_class(31, 2187));
  CHECK(tp.q[4] == mpq_class(5729, 531441));
  CHECK(tp.q[5] == mpq_class(41518, 4782969));
  CHECK(tp.q0[0] == 1);
  QSeries lhs = j_q_expansion(30).compose(tp.q);  // 1/q costs two orders
  QSeries rhs = j_of_family(30);
  CHECK(lhs.trunc() >= 30);
  for (long e = -1; e < 30; ++e) CHECK(lhs[e] == rhs[e]);
  REQUIRE(tp.printed.size() == 3);
  for (const auto& pc : tp.printed) CHECK_FALSE(pc.match);
  for (int p : {5, 7, 13})
    for (long e = 1; e < 32; ++e) CHECK(valuation_of(tp.q[e].get_den(), p) == 0);
}
