#include "doctest.h"
#include "regkit/regulator.hpp"
#include "regkit/special.hpp"

using namespace regkit;

namespace {

// A shallow limit cross-check keeps these tests fast.
RegulatorOptions quick() {
  RegulatorOptions opts;
  opts.s = 4;
  return opts;
}

bool eis_mod(const Eis& x, long a, long b, long n) {
  const int p = x.prime();
  return x.equals_mod(Eis(Padic::from_int(p, a), Padic::from_int(p, b)), n);
}

const RegulatorResult& result_7_1() {
  static const RegulatorResult r = regulator_output(7, 1, 20, 8, quick());
  return r;
}

}  // namespace

TEST_CASE("E1 against the rational oracle (p = 7, c = 1)") {
  // E1 = sqrt(-3) e(t) with e rational; (a, b) = (e, 2e) mod 7^8.
  const std::vector<std::pair<long, long>> expected = {
      {0, 0},       {2882400, 5764800}, {3683067, 1601333}, {4566766, 3368731},
      {4840135, 3915469}, {5537534, 5310267}, {2918885, 72969},   {2384837, 4769674},
      {422463, 844926},   {4770697, 3776593}, {5332028, 4899255}, {4893089, 4021377}};
  const RegulatorResult& r = result_7_1();
  for (size_t e = 0; e < expected.size(); ++e) {
    CAPTURE(e);
    CHECK(eis_mod(r.E1[static_cast<long>(e)], expected[e].first, expected[e].second, 8));
  }
}

TEST_CASE("E1 and E2 low coefficients") {
  const RegulatorResult& r = result_7_1();
  CHECK(r.E1[0].is_exact_zero());
  // E1 t-coefficient 3 F(0) = -(1 + 2 nu)/2, E2 t-coefficient -3 F(0).
  const PadicContext ctx{7, 8};
  const Eis half = RingTraits<Eis>::from_rational(ctx, mpq_class(1, 2));
  CHECK(r.E1[1].equals_mod(-(half + half.mul_int(2) * Eis::from_int(7, 0, 1)), 8));
  CHECK(r.E2[1].equals_mod(-r.E1[1], 8));
  // E2(0) = -9 ln_2(-nu); S_7 of the limit formula is good to 6 digits.
  const Eis s7(Padic::from_int(7, 179146530), Padic::from_int(7, 1917259959));
  CHECK(r.E2[0].equals_mod(s7.mul_int(-9), 6));
  CHECK(r.eps2[0].equals_mod(r.E2[0] * hypergeometric_F(PadicContext{7, 12}, 1)[0], 8));
  CHECK(r.eps2[0].b().is_zero());
}

TEST_CASE("all audits pass") {
  for (auto [p, c] : std::vector<std::pair<int, long>>{{7, 1}, {5, 1}, {7, 8}, {13, 14}}) {
    CAPTURE(p);
    CAPTURE(c);
    const RegulatorResult r = regulator_output(p, c, 20, 8, quick());
    for (const auto& a : r.audits) {
      CAPTURE(a.name);
      CAPTURE(a.detail);
      CHECK(a.pass);
    }
    CHECK(r.all_pass());
    CHECK(r.parity_nu_valuation >= 8);
  }
}

TEST_CASE("sign conventions") {
  RegulatorResult r = result_7_1();
  CHECK(r.sign == SignConvention::Corollary);
  auto [c1, c2] = r.regulator();
  CHECK((c1 + r.eps1).is_zero());
  r.sign = SignConvention::Intro;
  CHECK(r.regulator().second == r.eps2);
  CHECK(to_string(SignConvention::Intro) == "intro");
}

TEST_CASE("recomputation at higher precision confirms claimed digits") {
  const RegulatorResult& lo = result_7_1();
  const RegulatorResult hi = regulator_output(7, 1, 20, 11, quick());
  for (long e = 0; e < 20; ++e) {
    CHECK(lo.eps1[e].equals_mod(hi.eps1[e], lo.claimed_precision(lo.eps1, e)));
    CHECK(lo.eps2[e].equals_mod(hi.eps2[e], lo.claimed_precision(lo.eps2, e)));
    CHECK(lo.claimed_precision(lo.eps2, e) >= ledger_prediction(7, 8, e));
  }
}

TEST_CASE("precision exhaustion is reported") {
  RegulatorOptions opts = quick();
  opts.guard = 0;
  try {
    regulator_output(5, 1, 30, 6, opts);
    FAIL("expected PrecisionExhausted");
  } catch (const PrecisionExhausted& err) {
    CHECK(err.available < 6);
    CHECK(err.exponent >= 0);
    CHECK(err.exponent < 30);
  }
}

TEST_CASE("unit points are refused") {
  const mpq_class c = frobenius_constant_for_point(7, 2);
  CHECK(c == mpq_class(1, 64));
  CHECK_THROWS_AS(frobenius_constant_for_point(7, 8), ConfigError);
  CHECK_THROWS_AS(frobenius_constant_for_point(7, 14), ConfigError);
  const RegulatorResult r = regulator_output(7, c, 12, 6, quick());
  CHECK(r.all_pass());
  CHECK_THROWS_AS(evaluate_at_unit_point(r, 2), UnsupportedEvaluation);
  try {
    evaluate_at_unit_point(r, 2);
  } catch (const UnsupportedEvaluation& err) {
    CHECK(std::string(err.what()).find("Dwork-congruence") != std::string::npos);
  }
}

TEST_CASE("symbol map at n = 0") {
  const PadicContext ctx{5, 8};
  const FrobeniusSpec sigma = FrobeniusSpec::make(5, Padic::from_int(5, 1));
  // A Teichmueller constant.
  const Padic omega = hensel_root({mpz_class(0), mpz_class(-1), 0, 0, 0, mpz_class(1)}, 2, 5, 8);
  auto [d0, l0] = symbol_reg_n0(ESeries::constant(ctx, Eis::from_padic(omega), 20), sigma);
  CHECK(d0.is_zero());
  CHECK(l0.is_zero());

  const ESeries h1 = ESeries::from_rationals(ctx, {1, -1}, 20);
  const ESeries h2 = ESeries::from_rationals(ctx, {2, 3, 5, -1}, 20);
  auto [d1, l1] = symbol_reg_n0(h1, sigma);
  auto [d2, l2] = symbol_reg_n0(h2, sigma);
  auto [d12, l12] = symbol_reg_n0(h1 * h2, sigma);
  for (long e = 0; e < 18; ++e) {
    CHECK(d12[e].equals_mod(d1[e] + d2[e], 7));
    CHECK(l12[e].equals_mod(l1[e] + l2[e], 6));
  }
  const std::vector<long> oracle = {0, 15624, 7812, 5208, 3906, 0, 2604, 2232, 1953, 1736, 0, 12784};
  for (size_t e = 0; e < oracle.size(); ++e)
    CHECK(l1[static_cast<long>(e)].equals_mod(Eis::from_int(5, oracle[e]), 6));
  CHECK_THROWS_AS(symbol_reg_n0(ESeries::from_rationals(ctx, {5, 1}, 20), sigma), DomainError);
}
