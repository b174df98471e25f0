#include "doctest.h"
#include "regkit/series.hpp"

#include <random>

using namespace regkit;

namespace {

const NoContext kQ{};

QSeries qs(std::vector<long> cs, long trunc) {
  std::vector<mpq_class> q(cs.begin(), cs.end());
  return QSeries::from_rationals(kQ, q, trunc);
}

PSeries random_pseries(std::mt19937& rng, PadicContext ctx, long m, bool unit) {
  std::vector<mpq_class> cs;
  for (long i = 0; i < m; ++i) cs.emplace_back(static_cast<long>(rng() % 1000) - 500);
  if (unit) cs[0] = 1 + ctx.p * static_cast<long>(rng() % 5);
  return PSeries::from_rationals(ctx, cs, m).with_precision(ctx.prec);
}

}  // namespace

TEST_CASE("truncation of products") {
  QSeries f = qs({1, 2, 3}, 5);
  QSeries g = qs({0, 0, 1}, 4).shift(0);
  QSeries h = f * g;
  CHECK(h.trunc() == 4);  // min(5 + 2, 4 + 0)
  CHECK(h[2] == 1);
  CHECK(h[3] == 2);
}

TEST_CASE("inverse and log_deriv") {
  QSeries one_minus_t = qs({1, -1}, 8);
  QSeries ld = one_minus_t.log_deriv();
  for (long e = 0; e < 7; ++e) CHECK(ld[e] == -1);

  QSeries f = qs({0, 1, 1}, 10);  // t(1+t)
  QSeries l = f.log_deriv();
  CHECK(l[-1] == 1);
  CHECK(l[0] == 1);
  CHECK(l[1] == -1);
  CHECK(l[2] == 1);
  CHECK_THROWS_AS(qs({0, 0}, 2).log_deriv(), DomainError);
}

TEST_CASE("integrate") {
  QSeries one = qs({1}, 10);
  QSeries t = one.integrate();
  CHECK(t[1] == 1);
  CHECK(t[0] == 0);

  PadicContext ctx{5, 6};
  PSeries t4 = PSeries::monomial(ctx, Padic::from_rational(5, 1, 6), 4, 10);
  PSeries i = t4.integrate();
  CHECK(i[5].valuation() == -1);
  CHECK(i[5].precision() == 5);

  QSeries geo = qs({1, 1, 1, 1, 1, 1}, 6);
  QSeries gi = geo.integrate();
  CHECK(gi[5] == mpq_class(1, 5));
  CHECK(gi[3] == mpq_class(1, 3));

  QSeries res = QSeries::monomial(kQ, 1, -1, 5);
  CHECK_THROWS_AS(res.integrate(), NonIntegrable);
}

TEST_CASE("derivative undoes integrate") {
  std::mt19937 rng(3);
  PadicContext ctx{7, 8};
  for (int k = 0; k < 5; ++k) {
    PSeries f = random_pseries(rng, ctx, 20, false);
    PSeries back = f.integrate().derivative();
    for (long e = 0; e < 19; ++e) CHECK(back[e].equals_mod(f[e], back[e].precision()));
  }
}

TEST_CASE("compose and reversion") {
  QSeries f = qs({0, 2, 3, -1, 5}, 12);
  QSeries r = f.reversion();
  QSeries id = f.compose(r);
  CHECK(id[1] == 1);
  for (long e = 2; e < 12; ++e) CHECK(id[e] == 0);

  // Laurent outer series: (1/t) o (t + t^2) = 1/t - 1 + t - ...
  QSeries inv = QSeries::monomial(kQ, 1, -1, 6);
  QSeries g = qs({0, 1, 1}, 8);
  QSeries c = inv.compose(g);
  CHECK(c[-1] == 1);
  CHECK(c[0] == -1);
  CHECK(c[1] == 1);
}

TEST_CASE("substitute_sigma") {
  PadicContext ctx{5, 6};
  FrobeniusSpec s1 = FrobeniusSpec::make(5, Padic::from_int(5, 1));
  ESeries t = ESeries::variable(ctx).truncate(30);
  ESeries ts = substitute_sigma(t, s1);
  CHECK(ts[5] == Eis::from_int(5, 1));
  CHECK(ts.valuation() == 5);

  ESeries f = ESeries::one(ctx) + ESeries::monomial(ctx, Eis::nu(5), 1);
  ESeries fs = substitute_sigma(f.truncate(30), s1);
  CHECK(fs[5] == Eis::from_int(5, -1, -1));

  FrobeniusSpec s2 = FrobeniusSpec::make(5, Padic::from_rational(5, 6, 6));
  ESeries t2 = ESeries::monomial(ctx, Eis::from_int(5, 1), 2, 30);
  CHECK(substitute_sigma(t2, s2)[10].equals_mod(Eis::from_padic(Padic::from_rational(5, 36, 6)), 6));

  CHECK_THROWS_AS(FrobeniusSpec::make(5, Padic::from_int(5, 2)), ConfigError);
}

TEST_CASE("substitute_sigma is multiplicative") {
  std::mt19937 rng(11);
  PadicContext ctx{7, 6};
  FrobeniusSpec s = FrobeniusSpec::make(7, Padic::from_int(7, 8));
  for (int k = 0; k < 5; ++k) {
    PSeries f = random_pseries(rng, ctx, 25, false), g = random_pseries(rng, ctx, 25, false);
    PSeries lhs = substitute_sigma(f * g, s), rhs = substitute_sigma(f, s) * substitute_sigma(g, s);
    for (long e = 0; e < 25; ++e) CHECK(lhs[e].equals_mod(rhs[e], 6));
  }
}

TEST_CASE("log_deriv is additive") {
  std::mt19937 rng(5);
  PadicContext ctx{5, 8};
  for (int k = 0; k < 5; ++k) {
    PSeries f = random_pseries(rng, ctx, 15, true), g = random_pseries(rng, ctx, 15, true);
    PSeries lhs = (f * g).log_deriv(), rhs = f.log_deriv() + g.log_deriv();
    for (long e = 0; e < 14; ++e) CHECK(lhs[e].equals_mod(rhs[e], std::min(lhs[e].precision(), rhs[e].precision())));
  }
}
