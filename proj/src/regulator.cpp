#include "regkit/regulator.hpp"

#include <sstream>

#include "regkit/special.hpp"

namespace regkit {

namespace {

long floor_log(long n, int p) {
  long k = 0;
  for (long x = p; x <= n; x *= p) ++k;
  return k;
}

long digits_of_agreement(const Eis& a, const Eis& b) {
  const Eis d = a - b;
  return d.is_zero() ? d.precision() : std::min(d.valuation(), d.precision());
}

Audit make_audit(std::string name, bool pass, const std::string& detail) {
  return Audit{std::move(name), pass, detail};
}

std::string digits_detail(long got, long need) {
  std::ostringstream os;
  os << "vanishes to " << (got >= kInfinite ? std::string("exact") : std::to_string(got)) << " digits, need " << need;
  return os.str();
}

/// Least valuation of the nu-components of the coefficients below t^m.
long nu_component_valuation(const ESeries& s, long m) {
  long out = kInfinite;
  for (long e = s.low(); e < std::min(m, s.end()); ++e) {
    const Padic b = s[e].b();
    out = std::min(out, b.is_zero() ? b.precision() : std::min(b.valuation(), b.precision()));
  }
  return out;
}

ESeries conj_series(const ESeries& s) {
  return s.map([](const Eis& x) { return x.conj(); });
}

}  // namespace

std::string to_string(SignConvention s) { return s == SignConvention::Corollary ? "corollary" : "intro"; }

E2InitialValue e2_initial_value(int p, long n, long s, bool conjugate) {
  // -nu, or its conjugate -nu^2 = 1 + nu.
  const Eis z = conjugate ? Eis::from_int(p, 1, 1) : Eis::from_int(p, 0, -1);
  E2InitialValue out;
  const Eis ln2 = polylog_eval_xform(2, z, n);
  out.value = ln2.mul_int(-9);
  out.precision = out.value.precision();
  const PolylogLimit lim = polylog_eval(2, z, s);
  out.limit_depth = s;
  out.limit_delta = lim.delta;
  out.limit_claimed = lim.claimed_precision;
  out.agreement = digits_of_agreement(ln2, lim.value);
  return out;
}

PipelineInputs pipeline_inputs(const FamilyData& fam) {
  return PipelineInputs{fam.F, fam.dlog_q, fam.tau, fam.sigma, fam.trunc};
}

ESeries sigma_kernel(const FrobeniusSpec& sigma, const PadicContext& ctx, long m) {
  const Eis c = Eis::from_padic(sigma.c);
  const ESeries den = ESeries::monomial(ctx, c, sigma.p) - ESeries::one(ctx);
  return (ESeries::monomial(ctx, c, sigma.p - 1) * den.inverse(m)).truncate(m);
}

namespace {

ESeries f_sigma(const PipelineInputs& in) { return substitute_sigma(in.F, in.sigma).truncate(in.trunc); }

}  // namespace

ESeries solve_E1(const PipelineInputs& in) {
  const PadicContext& ctx = in.F.context();
  const long m = in.trunc;
  const ESeries one_over_t_minus_1 = (ESeries::variable(ctx) - ESeries::one(ctx)).inverse(m);
  const ESeries rhs = (in.F * one_over_t_minus_1 - f_sigma(in) * sigma_kernel(in.sigma, ctx, m)).mul_int(-3);
  return rhs.truncate(m - 1).integrate();
}

ESeries e2_derivative(const PipelineInputs& in, const ESeries& E1) {
  const PadicContext& ctx = in.F.context();
  const long m = in.trunc;
  const ESeries sigma_term = (f_sigma(in) * in.tau * sigma_kernel(in.sigma, ctx, m)).mul_int(3);
  return (-(E1 * in.dlog_q) - sigma_term).truncate(m - 1);
}

ESeries solve_E2(const PipelineInputs& in, const ESeries& E1, const Eis& e2_at_zero) {
  const ESeries rhs = e2_derivative(in, E1);
  ESeries integral;
  try {
    integral = rhs.integrate();
  } catch (const NonIntegrable& err) {
    throw ConsistencyFailure("E2 equation has a nonzero residue at t = 0: " + err.residue);
  }
  return integral + ESeries::constant(in.F.context(), e2_at_zero);
}

std::pair<ESeries, ESeries> epsilons(const ESeries& F, const ESeries& E1, const ESeries& E2) {
  const PadicContext& ctx = F.context();
  const ESeries four_one_minus_t = ESeries::from_rationals(ctx, {4, -4});
  const ESeries t = ESeries::variable(ctx);
  const ESeries hat_entry = four_one_minus_t * (F + (t * F.derivative()).mul_int(3));
  return {E1 * F.inverse() + hat_entry * E2, F * E2};
}

long ledger_prediction(int p, long prec, long n) { return prec - floor_log(std::max(n, 1L), p); }

bool RegulatorResult::all_pass() const {
  for (const auto& a : audits)
    if (!a.pass) return false;
  return true;
}

std::pair<ESeries, ESeries> RegulatorResult::regulator() const {
  if (sign == SignConvention::Intro) return {eps1, eps2};
  return {-eps1, -eps2};
}

long RegulatorResult::claimed_precision(const ESeries& s, long e) const { return std::min(prec, s[e].precision()); }

RegulatorResult regulator_output(int p, const mpq_class& c, long trunc, long prec, const RegulatorOptions& opts) {
  const FamilyData fam = build_family(p, c, trunc, prec, opts.guard);
  const PadicContext& ctx = fam.ctx;
  const long m = trunc;

  RegulatorResult r;
  r.p = p;
  r.c = c;
  r.trunc = trunc;
  r.prec = prec;
  r.working_precision = ctx.prec;
  r.sign = opts.sign;

  long s = opts.s > 0 ? opts.s : std::min(prec + 2, polylog_depth_for_budget(p, opts.limit_budget));
  if (s < 2) throw ConfigError("polylog depth s must be >= 2");
  r.e2_zero = e2_initial_value(p, ctx.prec, s);

  const PipelineInputs in = pipeline_inputs(fam);
  r.E1 = solve_E1(in);
  const ESeries rhs2 = e2_derivative(in, r.E1);
  r.E2 = solve_E2(in, r.E1, r.e2_zero.value);
  std::tie(r.eps1, r.eps2) = epsilons(fam.F, r.E1, r.E2);
  r.eps1 = r.eps1.truncate(m);
  r.eps2 = r.eps2.truncate(m);

  for (const auto& [name, series] : std::vector<std::pair<std::string, const ESeries*>>{
           {"E1", &r.E1}, {"E2", &r.E2}, {"eps1", &r.eps1}, {"eps2", &r.eps2}}) {
    if (series->trunc() < m)
      throw PrecisionExhausted(name + " is only known mod t^" + std::to_string(series->trunc()), name,
                               series->trunc(), 0);
    for (long e = 0; e < m; ++e) {
      const long have = (*series)[e].precision();
      if (have < prec) {
        std::ostringstream os;
        os << "coefficient t^" << e << " of " << name << " is known to " << have << " digits, " << prec
           << " requested";
        throw PrecisionExhausted(os.str(), name, e, have);
      }
    }
  }

  const long n_res = prec - floor_log(m, p);

  r.audits.push_back(make_audit("E1(0) = 0", r.E1[0].is_exact_zero(), "integration constant fixed by the residue argument"));
  r.audits.push_back(make_audit("E1 t-coefficient = 3 F(0)",
                                digits_of_agreement(r.E1[1], fam.F[0].mul_int(3)) >= prec, ""));
  {
    const Eis residue = (r.E1 * in.dlog_q)[-1];
    const long d = residue.is_zero() ? residue.precision() : residue.valuation();
    r.audits.push_back(make_audit("E2 right side has no residue at t = 0", residue.is_zero() && d >= prec,
                                  digits_detail(d, prec)));
  }

  // Residuals through independent routes: dq/q from the hat-basis form and the
  // Frobenius kernel as a pulled-back form.
  const ESeries one_over_t_minus_1 = (ESeries::variable(ctx) - ESeries::one(ctx)).inverse(m + 1);
  const ESeries kernel = pullback_form(one_over_t_minus_1, fam.sigma).div_int(p).truncate(m);
  const ESeries fs = substitute_sigma(fam.F, fam.sigma).truncate(m);
  {
    const ESeries rhs = (fam.F * one_over_t_minus_1 - fs * kernel).mul_int(-3);
    const long got = vanishing_digits(r.E1.derivative() - rhs, m - 1);
    r.audits.push_back(make_audit("E1 equation residual", got >= n_res, digits_detail(got, n_res)));
  }
  {
    const ESeries rhs = -(r.E1 * hat_connection_form(fam.F)) - (fs * fam.tau * kernel).mul_int(3);
    const long got = vanishing_digits(r.E2.derivative() - rhs, m - 1);
    r.audits.push_back(make_audit("E2 equation residual", got >= n_res, digits_detail(got, n_res)));
  }
  {
    std::ostringstream os;
    os << "x-form vs limit at s = " << r.e2_zero.limit_depth << ": agree to " << r.e2_zero.agreement
       << " digits, limit claims " << r.e2_zero.limit_claimed << " (delta " << r.e2_zero.limit_delta << ")";
    r.audits.push_back(make_audit("E2(0) limit cross-check",
                                  r.e2_zero.agreement >= r.e2_zero.limit_claimed && r.e2_zero.precision >= prec,
                                  os.str()));
  }
  {
    // An odd series has b = 2a coefficientwise.
    auto odd_defect = [&](const ESeries& s) {
      return vanishing_digits(s.map([](const Eis& x) {
        return Eis::from_padic(x.b() - x.a().mul_int(2));
      }), m);
    };
    const long got = std::min(odd_defect(r.E1), odd_defect(r.E2));
    r.audits.push_back(make_audit("E1, E2 are odd under nu <-> nu^2", got >= prec, digits_detail(got, prec)));
    r.parity_nu_valuation = std::min(nu_component_valuation(r.eps1, m), nu_component_valuation(r.eps2, m));
    r.audits.push_back(make_audit("nu-components of eps1, eps2 vanish", r.parity_nu_valuation >= prec,
                                  digits_detail(r.parity_nu_valuation, prec)));
  }
  {
    PipelineInputs conj_in = in;
    conj_in.F = conj_series(fam.F);
    const E2InitialValue conj_zero = e2_initial_value(p, ctx.prec, s, true);
    const ESeries e1 = solve_E1(conj_in);
    const ESeries e2 = solve_E2(conj_in, e1, conj_zero.value);
    auto [c1, c2] = epsilons(conj_in.F, e1, e2);
    const long got = std::min({vanishing_digits(e1 + r.E1, m), vanishing_digits(e2 + r.E2, m),
                               vanishing_digits(c1.truncate(m) - r.eps1, m),
                               vanishing_digits(c2.truncate(m) - r.eps2, m)});
    r.audits.push_back(make_audit("conjugated pipeline negates E and fixes eps", got >= prec,
                                  digits_detail(got, prec)));
  }
  {
    bool ok = true;
    std::string detail = "every coefficient meets N - floor(log_p n)";
    for (const ESeries* series : {&r.E2, &r.eps1, &r.eps2})
      for (long e = 0; e < m && ok; ++e)
        if (r.claimed_precision(*series, e) < ledger_prediction(p, prec, e)) {
          ok = false;
          detail = "coefficient t^" + std::to_string(e) + " below the ledger";
        }
    r.audits.push_back(make_audit("precision ledger", ok, detail));
  }
  return r;
}

mpq_class frobenius_constant_for_point(int p, const mpq_class& a) {
  require_prime_at_least_5(p);
  if (a == 0 || valuation_of(a.get_num(), p) > 0 || valuation_of(a.get_den(), p) > 0)
    throw ConfigError("a must be a p-adic unit");
  const mpq_class d = a - 1;
  if (d == 0 || valuation_of(d.get_num(), p) > 0) throw ConfigError("a must not be 1 mod p");
  mpq_class ap = 1;
  for (int i = 0; i < p - 1; ++i) ap *= a;
  return 1 / ap;
}

void evaluate_at_unit_point(const RegulatorResult& result, const mpq_class& a) {
  std::ostringstream os;
  os << "unsupported: requires Dwork-congruence continuation; eps1, eps2 are power series in t that do not "
        "converge at |a| = 1 (a = "
     << a.get_str() << ", p = " << result.p << ", c = a^(1-p) = " << result.c.get_str() << ")";
  throw UnsupportedEvaluation(os.str());
}

std::pair<ESeries, ESeries> symbol_reg_n0(const ESeries& h, const FrobeniusSpec& sigma) {
  if (h.valuation() != 0 || !h[0].is_unit()) throw DomainError("symbol_reg_n0: h must be a unit series");
  const ESeries capped = h.with_precision(h.context().prec);
  return {capped.log_deriv(), log_sigma(capped, sigma)};
}

}  // namespace regkit
