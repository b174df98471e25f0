#include "doctest.h"
#include "regkit/padic.hpp"

#include <random>

using namespace regkit;

TEST_CASE("construction and residues") {
  Padic a = Padic::from_rational(5, mpq_class(1, 3), 4);
  CHECK(a.valuation() == 0);
  CHECK(a.precision() == 4);
  CHECK((a.mul_int(3)).residue(4) == 1);

  Padic b = Padic::from_rational(5, mpq_class(2, 25), 3);
  CHECK(b.valuation() == -2);
  CHECK(b.relative_precision() == 5);

  CHECK(Padic::from_rational(5, 0, 3).is_exact_zero());
  Padic z = Padic::from_rational(5, 125, 3);
  CHECK(z.is_zero());
  CHECK_FALSE(z.is_exact_zero());
}

TEST_CASE("precision propagation") {
  Padic a = Padic::from_rational(7, 3, 5);
  Padic b = Padic::from_rational(7, 14, 8);
  CHECK((a + b).precision() == 5);
  Padic prod = a * b;  // v(b) = 1, so precision 5 + 1
  CHECK(prod.precision() == 6);
  CHECK(prod.valuation() == 1);
  CHECK(b.div_int(7).precision() == 7);
  CHECK(b.div_int(49).precision() == 6);
  Padic inv = b.inverse();
  CHECK(inv.valuation() == -1);
  CHECK(inv.relative_precision() == b.relative_precision());
}

TEST_CASE("exact arithmetic stays exact") {
  Padic a = Padic::from_int(5, 10);
  Padic b = Padic::from_int(5, -10);
  CHECK((a + b).is_exact_zero());
  CHECK((a * b).is_exact());
  CHECK(Padic::from_int(5, 25).valuation() == 2);
  CHECK_THROWS_AS((void)Padic::from_int(5, 3).inverse(), std::logic_error);
}

TEST_CASE("padic_log values") {
  CHECK(padic_log(Padic::from_rational(5, 1, 3)).is_zero());
  CHECK(padic_log(Padic::from_rational(5, 6, 3)).residue(3) == 55);
  CHECK(padic_log(Padic::from_rational(5, 36, 3)).residue(3) == 110);
  CHECK_THROWS_AS(padic_log(Padic::from_rational(5, 2, 3)), DomainError);
  CHECK_THROWS_AS(padic_log(Padic::from_rational(3, 4, 3)), ConfigError);
}

TEST_CASE("padic_log is additive") {
  std::mt19937 rng(7);
  for (int p : {5, 7, 13}) {
    for (int i = 0; i < 20; ++i) {
      const long N = 6;
      mpz_class u = 1 + mpz_class(p) * (rng() % 1000);
      mpz_class v = 1 + mpz_class(p) * (rng() % 1000);
      Padic U = Padic::from_rational(p, mpq_class(u), N), V = Padic::from_rational(p, mpq_class(v), N);
      Padic lhs = padic_log(U * V), rhs = padic_log(U) + padic_log(V);
      CHECK(lhs.equals_mod(rhs, std::min(lhs.precision(), rhs.precision())));
    }
  }
}

TEST_CASE("hensel_root") {
  CHECK(hensel_root({1, 1, 1}, 2, 7, 2).residue(2) == 30);
  CHECK(hensel_root({-1, 1}, 1, 7, 4).residue(4) == 1);
  CHECK(hensel_root({1, 1, 1}, 4, 7, 1).residue(1) == 4);
  CHECK_THROWS_AS(hensel_root({0, 0, 1}, 0, 7, 3), NotHenselLiftable);
  // The two roots are exchanged by r -> -1 - r.
  Padic r1 = hensel_root({1, 1, 1}, 2, 7, 10), r2 = hensel_root({1, 1, 1}, 4, 7, 10);
  CHECK((r1 + r2 + Padic::from_int(7, 1)).is_zero());
}

TEST_CASE("Eisenstein integers") {
  Eis nu = Eis::nu(5);
  Eis s = Eis::sqrt_minus_3(5);
  CHECK(s * s == Eis::from_int(5, -3));
  CHECK(nu * nu == Eis::from_int(5, -1, -1));
  CHECK(nu.pow(3) == Eis::from_int(5, 1));
  CHECK(s.norm() == Padic::from_int(5, 3));
  Eis x = Eis(Padic::from_rational(5, 2, 6), Padic::from_rational(5, 7, 6));
  CHECK((x * x.inverse()).equals_mod(Eis::from_int(5, 1), 6));
}

TEST_CASE("eis_frobenius") {
  CHECK(eis_frobenius(Eis::from_int(7, 3, 5)) == Eis::from_int(7, 3, 5));
  CHECK(eis_frobenius(Eis::from_int(5, 0, 1)) == Eis::from_int(5, -1, -1));
  CHECK(eis_frobenius(Eis::from_int(5, 3, 0)) == Eis::from_int(5, 3, 0));
  Eis z = Eis::from_int(11, 4, -9);
  CHECK(eis_frobenius(eis_frobenius(z)) == z);
}

TEST_CASE("canonical nu embedding") {
  auto nu = canonical_nu(7, 10);
  REQUIRE(nu);
  CHECK(nu->residue(1) == 2);
  Padic s = embed(Eis::sqrt_minus_3(7), *nu);
  CHECK((s * s).equals_mod(Padic::from_int(7, -3), 10));
  CHECK_FALSE(canonical_nu(5, 4));
}
