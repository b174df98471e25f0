#include "commands.hpp"

#include <random>
#include <sstream>

#include "cache.hpp"
#include "regkit/curve.hpp"
#include "regkit/family.hpp"
#include "regkit/regulator.hpp"
#include "regkit/special.hpp"

namespace regkit::cli {

namespace {

constexpr long kLimitBudget = 10'000'000;

Json audit(const std::string& name, bool pass, const std::string& detail = "") {
  Json a;
  a["name"] = name;
  a["pass"] = pass;
  a["detail"] = detail;
  return a;
}

bool all_pass(const Json& audits) {
  for (const auto& a : audits)
    if (!a["pass"].get<bool>()) return false;
  return true;
}

Json document(const Json& config, Json audits, Json data, const std::string& status) {
  Json doc;
  doc["schema"] = kSchema;
  doc["status"] = status;
  doc["config"] = config;
  doc["audits"] = std::move(audits);
  doc["data"] = std::move(data);
  return doc;
}

int exit_for_status(const std::string& status) {
  if (status == "pass") return kPass;
  if (status == "refused") return kUnsupported;
  if (status == "precision-exhausted") return kPrecisionExhausted;
  if (status == "bad-config") return kBadConfig;
  return kAuditFailure;
}

CommandOutcome finish(Json doc) {
  CommandOutcome out;
  out.exit_code = exit_for_status(doc["status"].get<std::string>());
  out.document = std::move(doc);
  return out;
}

std::string digits(long d) { return d >= kInfinite ? std::string("exact") : std::to_string(d); }

std::string vanish_detail(long got, long need) {
  return "vanishes to " + digits(got) + " digits, need " + std::to_string(need);
}

Json common_config(const RunConfig& cfg) {
  Json c;
  c["command"] = cfg.command;
  c["p"] = cfg.p;
  c["prec"] = cfg.prec;
  c["trunc"] = cfg.trunc;
  c["c"] = cfg.c.get_str();
  return c;
}

std::optional<ResultCache> cache_for(const RunConfig& cfg) {
  if (cfg.cache_dir) return ResultCache(*cfg.cache_dir);
  return std::nullopt;
}

/// Runs compute() unless the cache already holds the document for key.
template <class Compute>
CommandOutcome cached(const RunConfig& cfg, const Json& key, Compute compute) {
  const auto cache = cache_for(cfg);
  if (cache) {
    if (auto text = cache->lookup(key)) {
      Json doc = Json::parse(*text, nullptr, false);
      if (!doc.is_discarded() && doc.contains("status")) {
        CommandOutcome out = finish(std::move(doc));
        out.from_cache = true;
        return out;
      }
    }
  }
  Json doc = compute();
  if (cache) cache->store(key, render(doc));
  return finish(std::move(doc));
}

Eis parse_z(const std::string& spec, int p, long prec) {
  auto from = [&](const mpq_class& a, const mpq_class& b) {
    return Eis(Padic::from_rational(p, a, prec), Padic::from_rational(p, b, prec));
  };
  if (spec == "nu") return Eis::from_int(p, 0, 1);
  if (spec == "-nu") return Eis::from_int(p, 0, -1);
  if (spec == "nu^2") return Eis::from_int(p, -1, -1);
  if (spec == "-nu^2") return Eis::from_int(p, 1, 1);
  const auto comma = spec.find(',');
  if (comma != std::string::npos)
    return from(parse_rational(spec.substr(0, comma)), parse_rational(spec.substr(comma + 1)));
  return from(parse_rational(spec), 0);
}

// ------------------------------------------------------------- family audits

Json family_audits(const FamilyData& fam, bool corrupt) {
  const long n = fam.prec;
  const long m = fam.trunc - 2;
  const int p = fam.p;
  Json audits = Json::array();
  auto vanish = [&](const std::string& name, const ESeries& s) {
    const long got = vanishing_digits(s, m);
    audits.push_back(audit(name, got >= n, vanish_detail(got, n)));
  };
  auto residual = [&](const std::string& name, const FilFMIC& obj) {
    const ResidualCheck rc = check_vanishes(horizontality_residual(obj), n, m);
    audits.push_back(audit(name, rc.vanishes, rc.vanishes ? "residual vanishes mod (p^" + std::to_string(n) +
                                                                 ", t^" + std::to_string(m) + ")"
                                                           : rc.detail));
  };

  const SeriesMatrix& P = fam.basis;
  vanish("family: det P = 1", P(0, 0) * P(1, 1) - P(0, 1) * P(1, 0) - ESeries::one(fam.ctx));
  vanish("family: nabla(eta_hat) = 0, w_hat part", fam.hat_connection(0, 1));
  vanish("family: nabla(eta_hat) = 0, eta_hat part", fam.hat_connection(1, 1));
  vanish("family: nabla(w_hat) has no w_hat part", fam.hat_connection(0, 0));
  vanish("family: nabla(w_hat) = dt/(12(t^2-t)F^2) eta_hat", fam.hat_connection(1, 0) - hat_connection_form(fam.F));
  vanish("family: dt/(12(t^2-t)F^2) = dq/q", hat_connection_form(fam.F) - fam.dlog_q);
  {
    const Padic arg = (Padic::from_int(p, 27).pow(p - 1) * fam.sigma.c).with_precision(fam.ctx.prec + 1);
    const Padic expected = padic_log(arg).div_int(-p);
    audits.push_back(audit("family: tau(0) = -p^-1 log(27^(p-1) c)",
                           fam.tau[0].equals_mod(Eis::from_padic(expected), n)));
    bool integral = true;
    for (long e = 0; e < m; ++e) {
      const Eis c = fam.tau[e];
      if (c.precision() < n || (!c.is_zero() && c.valuation() < 0)) integral = false;
    }
    audits.push_back(audit("family: tau is integral", integral));
  }
  residual("family: Frobenius on (w_hat, eta_hat) is horizontal", fam.hat_object());
  vanish("family: p dlog q - p dtau = sigma^*(dlog q)",
         (fam.dlog_q - fam.tau.derivative()).mul_int(p) - pullback_form(fam.dlog_q, fam.sigma));
  FilFMIC algebraic = fam.algebraic_object();
  if (corrupt) algebraic = corrupt_frobenius(algebraic, 0, 1, 2);
  residual("family: Frobenius on (omega, eta) is horizontal", algebraic);
  {
    long nu = kInfinite;
    for (size_t i = 0; i < 2; ++i)
      for (size_t j = 0; j < 2; ++j)
        nu = std::min(nu, vanishing_digits(algebraic.frobenius(i, j).map([](const Eis& x) {
          return Eis::from_padic(x.b());
        }), m));
    audits.push_back(audit("family: Frobenius on (omega, eta) is nu-free", nu >= n, vanish_detail(nu, n)));
    const SeriesMatrix& phi = algebraic.frobenius;
    const long det = vanishing_digits(phi(0, 0) * phi(1, 1) - phi(0, 1) * phi(1, 0) -
                                          ESeries::constant(fam.ctx, Eis::from_int(p, p)),
                                      m);
    audits.push_back(audit("family: det Frobenius on (omega, eta) = p", det >= n, vanish_detail(det, n)));
  }
  {
    SeriesMatrix qm(1, 1, to_padic_series<Eis>(fam.q, fam.ctx).with_precision(fam.ctx.prec));
    const FilFMIC log = make_log_matrix(qm, fam.sigma);
    const FilFMIC tw = twist(fam.hat_object(), 1);
    long got = kInfinite;
    for (size_t i = 0; i < 2; ++i)
      for (size_t j = 0; j < 2; ++j) {
        got = std::min(got, vanishing_digits(tw.connection(i, j) - log.connection(i, j), m));
        got = std::min(got, vanishing_digits(tw.frobenius(i, j) - log.frobenius(i, j), m));
      }
    audits.push_back(audit("family: Tate(1) twist of the hat object = Log(q)", got >= n && tw.jumps == log.jumps,
                           vanish_detail(got, n)));
  }
  audits.push_back(audit("family: hat object is transversal", check_transversality(fam.hat_object())));
  return audits;
}

Json printed_json(const std::vector<PrintedCoefficient>& printed) {
  Json out = Json::array();
  for (const auto& pc : printed) {
    Json e;
    e["exponent"] = pc.exponent;
    e["printed"] = pc.printed.get_str();
    e["computed"] = pc.computed.get_str();
    e["match"] = pc.match;
    out.push_back(std::move(e));
  }
  return out;
}

// ------------------------------------------------------------- other suites

Json curve_audits() {
  Json audits = Json::array();
  const CurveFunction h1 = symbol_h1(), h2 = symbol_h2();
  for (Place place : handled_places()) {
    const RatFunc sym = tame_symbol(h1, h2, place);
    audits.push_back(audit("curve: tame symbol of (h1, h2) at " + to_string(place) + " is 1", sym == RatFunc(1L),
                           sym.to_string()));
  }
  const auto [cw, ce] = dlog_reduce(h1, h2);
  const RatFunc expected = RatFunc(3L) / (RatFunc::t() - RatFunc(1L));
  audits.push_back(audit("curve: dlog_reduce(h1, h2) = (3/(t-1), 0)", cw == expected && ce.is_zero(),
                         "(" + cw.to_string() + ", " + ce.to_string() + ")"));
  return audits;
}

Json tate_audits(long m) {
  Json audits = Json::array();
  const TatePeriod period = tate_period(m + 2);
  const QSeries lhs = j_q_expansion(m + 2).compose(period.q).truncate(m);
  const QSeries rhs = j_of_family(m);
  audits.push_back(audit("tate period: j(q(t)) = 27(1+8t)^3/(t(1-t)^3) mod t^" + std::to_string(m), lhs == rhs));
  audits.push_back(audit("tate period: q = t/27 + O(t^2)", period.q[1] == mpq_class(1, 27) && period.q[0] == 0));
  return audits;
}

Json filfmic_audits(int p, long n, long m) {
  Json audits = Json::array();
  const PadicContext ctx{p, n + 3};
  const FrobeniusSpec sigma = FrobeniusSpec::make(p, Padic::from_int(p, 1));
  auto residual = [&](const std::string& name, const FilFMIC& obj) {
    const ResidualCheck rc = check_vanishes(horizontality_residual(obj), n, m);
    audits.push_back(audit(name, rc.vanishes && check_transversality(obj), rc.detail));
  };
  for (long r = -2; r <= 2; ++r) residual("filfmic: Tate(" + std::to_string(r) + ")", make_tate(r, sigma, ctx));
  residual("filfmic: Log(1 - t)", make_log(ESeries::from_rationals(ctx, {1, -1}, m + 2), sigma));
  residual("filfmic: Pol_2", make_polylog(2, ctx, m + 2));
  {
    std::mt19937 rng(20240611);
    auto unit = [&] {
      std::vector<mpq_class> cs;
      for (long i = 0; i < m + 2; ++i) cs.emplace_back(static_cast<long>(rng() % 199) - 99);
      cs[0] = 1 + static_cast<long>(rng() % (p - 1));
      return ESeries::from_rationals(ctx, cs, m + 2).with_precision(ctx.prec);
    };
    SeriesMatrix q(2, 2, ESeries(ctx, kInfinite));
    q(0, 0) = unit();
    q(1, 1) = unit();
    q(0, 1) = q(1, 0) = unit();
    residual("filfmic: Log(q) for a symmetric 2x2 matrix", make_log_matrix(q, sigma));
  }
  const ResidualCheck printed =
      check_vanishes(horizontality_residual(make_polylog(2, ctx, m + 2, PolylogFrobenius::Printed)), n, m);
  audits.push_back(audit("filfmic: printed Pol_2 Frobenius variant fails horizontality", !printed.vanishes,
                         printed.detail));
  return audits;
}

Json polylog_audits(int p) {
  Json audits = Json::array();
  const PolylogLimit zero = polylog_eval(0, Eis::from_int(p, 2), 5);
  const Eis closed = RingTraits<Eis>::from_rational(PadicContext{p, 12}, mpq_class(2, -1)) -
                     RingTraits<Eis>::from_rational(PadicContext{p, 12},
                                                    mpq_class(mpz_class(1) << p, 1 - (mpz_class(1) << p)));
  audits.push_back(audit("polylog: r = 0 matches z/(1-z) - z^p/(1-z^p) at z = 2",
                         zero.value.equals_mod(closed, zero.claimed_precision)));
  const long s = std::min(6L, polylog_depth_for_budget(p, kLimitBudget));
  const PolylogLimit a = polylog_eval(2, Eis::from_int(p, 0, -1), s);
  const PolylogLimit b = polylog_eval(2, Eis::from_int(p, 1, 1), s);
  const long need = s - 2;
  audits.push_back(audit("polylog: ln_2(-nu) + ln_2(-nu^2) = 0 mod p^" + std::to_string(need),
                         (a.value + b.value).equals_mod(Eis::from_int(p, 0), need)));
  return audits;
}

void append(Json& into, const Json& from) {
  for (const auto& a : from) into.push_back(a);
}

}  // namespace

// ------------------------------------------------------------------ public

mpq_class parse_rational(const std::string& text) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0) throw ConfigError("not a rational number: '" + text + "'");
  if (q.get_den() == 0) throw ConfigError("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

void validate(const RunConfig& cfg) {
  require_prime_at_least_5(cfg.p);
  if (cfg.trunc < 4) throw ConfigError("--trunc must be at least 4");
  if (cfg.prec < 2) throw ConfigError("--prec must be at least 2");
  if (cfg.s != 0 && cfg.s < 2) throw ConfigError("--s must be at least 2");
  if (cfg.c == 0 || valuation_of(cfg.c.get_num(), cfg.p) != 0 || valuation_of(cfg.c.get_den(), cfg.p) != 0)
    throw ConfigError("--c must be a p-adic unit");
  const mpq_class d = cfg.c - 1;
  if (d != 0 && valuation_of(d.get_num(), cfg.p) == 0) throw ConfigError("--c must be 1 mod p");
  if (cfg.sign != "corollary" && cfg.sign != "intro") throw ConfigError("--sign must be corollary or intro");
}

long default_depth(const RunConfig& cfg) {
  return cfg.s > 0 ? cfg.s : std::min(cfg.prec + 2, polylog_depth_for_budget(cfg.p, kLimitBudget));
}

CommandOutcome run_regulator(const RunConfig& in) {
  RunConfig cfg = in;
  if (cfg.a) {
    const mpq_class c = frobenius_constant_for_point(cfg.p, *cfg.a);
    if (cfg.c_given && cfg.c != c) throw ConfigError("--c conflicts with --a: a^(1-p) = " + c.get_str());
    cfg.c = c;
  }
  validate(cfg);
  Json config = common_config(cfg);
  config["a"] = cfg.a ? Json(cfg.a->get_str()) : Json(nullptr);
  config["s"] = default_depth(cfg);
  config["guard"] = cfg.guard ? Json(*cfg.guard) : Json("auto");
  config["sign"] = cfg.sign;

  return cached(cfg, config, [&] {
    RegulatorOptions opts;
    opts.s = default_depth(cfg);
    opts.guard = cfg.guard;
    opts.sign = cfg.sign == "intro" ? SignConvention::Intro : SignConvention::Corollary;
    const RegulatorResult r = regulator_output(cfg.p, cfg.c, cfg.trunc, cfg.prec, opts);
    const long n = cfg.prec;

    Json audits = Json::array();
    for (const auto& a : r.audits) audits.push_back(audit("regulator: " + a.name, a.pass, a.detail));

    Json data;
    data["claimed_precision"] = n;
    data["working_precision"] = r.working_precision;
    data["E1"] = to_json(r.E1, n);
    data["E2"] = to_json(r.E2, n);
    data["eps1"] = to_json(r.eps1, n);
    data["eps2"] = to_json(r.eps2, n);
    {
      Json e2;
      e2["value"] = to_json(r.e2_zero.value.with_precision(n));
      e2["method"] = "x-form of ln_2 at x = 1/(1 - z), z = -nu";
      e2["limit_depth"] = r.e2_zero.limit_depth;
      e2["limit_delta"] = r.e2_zero.limit_delta;
      e2["limit_claimed_precision"] = r.e2_zero.limit_claimed;
      e2["agreement"] = r.e2_zero.agreement;
      data["E2_at_zero"] = std::move(e2);
    }
    data["parity_nu_valuation"] = std::min(r.parity_nu_valuation, n);
    {
      Json reg;
      const auto [w, e] = r.regulator();
      reg["sign_convention"] = to_string(r.sign);
      reg["dx_over_y"] = to_json(w, n);
      reg["x_dx_over_y"] = to_json(e, n);
      data["regulator"] = std::move(reg);
    }
    std::string status = all_pass(audits) ? "pass" : "audit-failure";
    if (cfg.a) {
      try {
        evaluate_at_unit_point(r, *cfg.a);
      } catch (const UnsupportedEvaluation& err) {
        Json ev;
        ev["a"] = cfg.a->get_str();
        ev["c"] = cfg.c.get_str();
        ev["refusal"] = err.what();
        data["evaluation"] = std::move(ev);
        if (status == "pass") status = "refused";
      }
    }
    return document(config, std::move(audits), std::move(data), status);
  });
}

CommandOutcome run_polylog(const RunConfig& cfg) {
  validate(cfg);
  if (cfg.r < 0) throw ConfigError("--r must be non-negative");
  const long s = default_depth(cfg);
  Json config;
  config["command"] = cfg.command;
  config["p"] = cfg.p;
  config["prec"] = cfg.prec;
  config["r"] = cfg.r;
  config["z"] = cfg.z;
  config["s"] = s;
  const Eis z = parse_z(cfg.z, cfg.p, std::max(cfg.prec, s) + 4);

  Json audits = Json::array();
  Json data;
  PolylogLimit lim;
  try {
    lim = polylog_eval(cfg.r, z, s);
  } catch (const DomainError& err) {
    data["refusal"] = err.what();
    return finish(document(config, std::move(audits), std::move(data), "refused"));
  }
  data["value"] = to_json(lim.value);
  data["claimed_precision"] = lim.claimed_precision;
  data["delta"] = lim.delta;
  data["raw"] = to_json(lim.raw);
  data["previous"] = to_json(lim.previous);
  audits.push_back(audit("polylog: stabilization S_s = S_(s-1) mod p^(s - delta)", lim.claimed_precision >= 1,
                         "delta = " + std::to_string(lim.delta)));
  if (cfg.r == 0) {
    const long work = std::max(cfg.prec, s) + 4;
    const Eis one = Eis::from_int(cfg.p, 1).with_precision(work);
    const Eis zp = z.with_precision(work).pow(cfg.p);
    const Eis closed = z.with_precision(work) / (one - z) - zp / (one - zp);
    data["closed_form"] = to_json(closed.with_precision(cfg.prec));
    audits.push_back(audit("polylog: r = 0 closed form", lim.value.equals_mod(closed, lim.claimed_precision)));
  } else {
    const Eis x = polylog_eval_xform(cfg.r, z, cfg.prec);
    data["x_form_value"] = to_json(x);
    const long need = std::min(lim.claimed_precision, cfg.prec);
    audits.push_back(audit("polylog: x-form agrees with the limit mod p^" + std::to_string(need),
                           x.equals_mod(lim.value, need)));
  }
  const std::string status = all_pass(audits) ? "pass" : "audit-failure";
  return finish(document(config, std::move(audits), std::move(data), status));
}

CommandOutcome run_family(const RunConfig& cfg) {
  validate(cfg);
  Json config = common_config(cfg);
  config["corrupt"] = cfg.corrupt;
  return cached(cfg, config, [&] {
    const FamilyData fam = build_family(cfg.p, cfg.c, cfg.trunc, cfg.prec);
    const long n = cfg.prec;
    Json audits = family_audits(fam, cfg.corrupt);
    Json data;
    data["working_precision"] = fam.ctx.prec;
    data["F"] = to_json(fam.F, n);
    data["q"] = to_json(fam.q);
    data["q0"] = to_json(fam.q0);
    data["dlog_q"] = to_json(fam.dlog_q, n);
    data["tau"] = to_json(fam.tau, n);
    data["frobenius_hat"] = to_json(fam.phi_hat, n);
    data["frobenius_algebraic"] = to_json(fam.phi_algebraic, n);
    data["printed_q_coefficients"] = printed_json(tate_period(6).printed);
    const std::string status = all_pass(audits) ? "pass" : "audit-failure";
    return document(config, std::move(audits), std::move(data), status);
  });
}

CommandOutcome run_check(const RunConfig& cfg) {
  validate(cfg);
  Json config = common_config(cfg);
  config["corrupt"] = cfg.corrupt;
  config["family_only"] = cfg.family_only;
  config["s"] = default_depth(cfg);

  const FamilyData fam = build_family(cfg.p, cfg.c, cfg.trunc, cfg.prec);
  Json audits = family_audits(fam, cfg.corrupt);
  Json data;
  if (!cfg.family_only) {
    append(audits, curve_audits());
    append(audits, tate_audits(30));
    append(audits, filfmic_audits(cfg.p, cfg.prec, std::min(cfg.trunc, 40L)));
    append(audits, polylog_audits(cfg.p));
    RegulatorOptions opts;
    opts.s = default_depth(cfg);
    const RegulatorResult r = regulator_output(cfg.p, cfg.c, cfg.trunc, cfg.prec, opts);
    for (const auto& a : r.audits) audits.push_back(audit("regulator: " + a.name, a.pass, a.detail));
    {
      // D = -dlog(xi) = -c_omega dt (x) omega and omega = F w_hat: the non-Frobenius
      // part of dE1/dt is the w_hat coefficient of D.
      const auto [cw, ce] = dlog_reduce(symbol_h1(), symbol_h2());
      const long m = cfg.trunc;
      const ESeries d_hat = -(to_padic_series<Eis>(expand_at_zero(cw, m), fam.ctx) * fam.F);
      const ESeries direct =
          (fam.F * (ESeries::variable(fam.ctx) - ESeries::one(fam.ctx)).inverse(m)).mul_int(-3);
      const long got = vanishing_digits((d_hat - direct).truncate(m - 1), m - 1);
      audits.push_back(audit("regulator: D-side form matches dlog_reduce in the hat basis",
                             got >= cfg.prec && ce.is_zero(), vanish_detail(got, cfg.prec)));
    }
  }
  long passed = 0, failed = 0;
  Json failing = Json::array();
  for (const auto& a : audits) {
    if (a["pass"].get<bool>()) {
      ++passed;
    } else {
      ++failed;
      failing.push_back(a["name"]);
    }
  }
  data["passed"] = passed;
  data["failed"] = failed;
  data["failing"] = std::move(failing);
  const std::string status = failed == 0 ? "pass" : "audit-failure";
  return finish(document(config, std::move(audits), std::move(data), status));
}

CommandOutcome run_filfmic_demo(const RunConfig& cfg) {
  validate(cfg);
  Json config = common_config(cfg);
  config["corrupt"] = cfg.corrupt;
  const long n = cfg.prec;
  const long m = cfg.trunc;
  const PadicContext ctx{cfg.p, n + 3};
  const FrobeniusSpec sigma = FrobeniusSpec::make(cfg.p, Padic::from_rational(cfg.p, cfg.c, ctx.prec));
  std::vector<std::pair<std::string, FilFMIC>> objects;
  objects.emplace_back("Tate(1)", make_tate(1, sigma, ctx));
  FilFMIC log = make_log(ESeries::from_rationals(ctx, {1, -1}, m + 2), sigma);
  if (cfg.corrupt) log = corrupt_frobenius(log, 1, 0, 2);
  objects.emplace_back("Log(1 - t)", log);
  objects.emplace_back("Pol_2", make_polylog(2, ctx, m + 2));
  {
    const FamilyData fam = build_family(cfg.p, cfg.c, m, n);
    SeriesMatrix qm(1, 1, to_padic_series<Eis>(fam.q, fam.ctx).with_precision(fam.ctx.prec));
    objects.emplace_back("Log(q)", make_log_matrix(qm, fam.sigma));
  }
  Json audits = Json::array();
  Json data = Json::object();
  for (const auto& [name, obj] : objects) {
    const ResidualCheck rc = check_vanishes(horizontality_residual(obj), n, m);
    audits.push_back(audit("filfmic-demo: " + name + " is horizontal", rc.vanishes, rc.detail));
    audits.push_back(audit("filfmic-demo: " + name + " is transversal", check_transversality(obj)));
    Json entry = to_json(obj, n);
    entry["residual"] = to_json(rc);
    data[name] = std::move(entry);
  }
  const std::string status = all_pass(audits) ? "pass" : "audit-failure";
  return finish(document(config, std::move(audits), std::move(data), status));
}

CommandOutcome run(const RunConfig& cfg) {
  auto failure = [&](const std::string& status, const std::string& message, Json extra = Json::object()) {
    Json config;
    config["command"] = cfg.command;
    Json data = std::move(extra);
    data["error"] = message;
    return finish(document(config, Json::array(), std::move(data), status));
  };
  try {
    if (cfg.command == "regulator") return run_regulator(cfg);
    if (cfg.command == "polylog") return run_polylog(cfg);
    if (cfg.command == "family") return run_family(cfg);
    if (cfg.command == "check") return run_check(cfg);
    if (cfg.command == "filfmic-demo") return run_filfmic_demo(cfg);
    return failure("bad-config", "unknown command '" + cfg.command + "'");
  } catch (const ConfigError& err) {
    return failure("bad-config", err.what());
  } catch (const UnsupportedEvaluation& err) {
    return failure("refused", err.what());
  } catch (const PrecisionExhausted& err) {
    Json extra;
    extra["series"] = err.series;
    extra["first_unusable_coefficient"] = err.exponent;
    extra["available_digits"] = err.available;
    return failure("precision-exhausted", err.what(), std::move(extra));
  } catch (const ConsistencyFailure& err) {
    return failure("audit-failure", err.what());
  }
}

std::string render(const Json& document) { return document.dump(2) + "\n"; }

}  // namespace regkit::cli
