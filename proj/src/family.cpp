#include "regkit/family.hpp"

#include "regkit/special.hpp"

namespace regkit {

namespace {

ESeries zero_series(const PadicContext& ctx) { return ESeries(ctx, kInfinite); }

Eis rational(const PadicContext& ctx, const mpq_class& q) { return RingTraits<Eis>::from_rational(ctx, q); }

}  // namespace

RatMatrix gm_matrix() {
  const RatFunc t = RatFunc::t();
  RatMatrix a(2, 2, RatFunc(0L));
  a(0, 0) = RatFunc(mpq_class(-1, 3)) / t;
  a(1, 0) = RatFunc(mpq_class(1, 12)) / (t * t - t);
  a(0, 1) = RatFunc(mpq_class(4, 3)) / t;
  a(1, 1) = RatFunc(mpq_class(1, 3)) / t;
  return a;
}

QSeries expand_at_zero(const RatFunc& f, long m) {
  const QSeries num = QSeries::from_rationals(NoContext{}, f.num().coeffs());
  const QSeries den = QSeries::from_rationals(NoContext{}, f.den().coeffs());
  return (num * den.inverse(m)).truncate(m);
}

SeriesMatrix expand_matrix(const RatMatrix& a, const PadicContext& ctx, long m) {
  SeriesMatrix out(a.rows(), a.cols(), zero_series(ctx));
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) out(i, j) = to_padic_series<Eis>(expand_at_zero(a(i, j), m), ctx);
  return out;
}

SeriesMatrix hat_basis(const ESeries& F) {
  const PadicContext& ctx = F.context();
  const ESeries t = ESeries::variable(ctx);
  const ESeries one_minus_t = ESeries::from_rationals(ctx, {4, -4});
  SeriesMatrix p(2, 2, zero_series(ctx));
  p(0, 0) = F.inverse();
  p(0, 1) = one_minus_t * (F + (t * F.derivative()).mul_int(3));
  p(1, 1) = F;
  return p;
}

SeriesMatrix inverse_2x2(const SeriesMatrix& m) {
  const ESeries det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  const ESeries inv_det = det.inverse();
  SeriesMatrix out = m;
  out(0, 0) = m(1, 1) * inv_det;
  out(1, 1) = m(0, 0) * inv_det;
  out(0, 1) = -(m(0, 1) * inv_det);
  out(1, 0) = -(m(1, 0) * inv_det);
  return out;
}

SeriesMatrix change_basis(const SeriesMatrix& connection, const SeriesMatrix& basis) {
  const ESeries zero = zero_series(basis(0, 0).context());
  const SeriesMatrix d_basis = basis.map([](const ESeries& s) { return s.derivative(); });
  return SeriesMatrix::multiply(inverse_2x2(basis), SeriesMatrix::multiply(connection, basis, zero) + d_basis, zero);
}

ESeries hat_connection_form(const ESeries& F) {
  const PadicContext& ctx = F.context();
  const ESeries t2_minus_t = ESeries::from_rationals(ctx, {0, -12, 12});
  return (t2_minus_t * F * F).inverse();
}

ESeries tau_sigma(const ESeries& q0, const FrobeniusSpec& sigma) {
  const PadicContext& ctx = q0.context();
  const int p = sigma.p;
  const Padic twenty_seven = Padic::from_int(p, 27);
  const Padic arg = (twenty_seven.pow(p - 1) * sigma.c).with_precision(ctx.prec + 1);
  const Padic constant = padic_log(arg).div_int(-p);
  return log_sigma(q0, sigma) + ESeries::constant(ctx, Eis::from_padic(constant));
}

SeriesMatrix frobenius_hat(const ESeries& tau) {
  const PadicContext& ctx = tau.context();
  SeriesMatrix phi(2, 2, zero_series(ctx));
  phi(0, 0) = ESeries::constant(ctx, Eis::from_int(ctx.p, ctx.p));
  phi(1, 0) = -tau.mul_int(ctx.p);
  phi(1, 1) = ESeries::one(ctx);
  return phi;
}

SeriesMatrix frobenius_algebraic(const SeriesMatrix& basis, const SeriesMatrix& phi_hat, const FrobeniusSpec& sigma) {
  const ESeries zero = zero_series(basis(0, 0).context());
  const SeriesMatrix basis_sigma = basis.map([&](const ESeries& s) { return substitute_sigma(s, sigma); });
  return SeriesMatrix::multiply(SeriesMatrix::multiply(basis, phi_hat, zero), inverse_2x2(basis_sigma), zero);
}

FilFMIC FamilyData::hat_object() const {
  FilFMIC obj;
  obj.labels = {"w_hat", "eta_hat"};
  obj.connection = hat_connection;
  obj.frobenius = phi_hat;
  obj.jumps = {1, 0};
  obj.sigma = sigma;
  obj.ctx = ctx;
  return obj;
}

FilFMIC FamilyData::algebraic_object() const {
  FilFMIC obj;
  obj.labels = {"omega", "eta"};
  obj.connection = gm_series;
  obj.frobenius = phi_algebraic;
  obj.jumps = {1, 0};
  obj.sigma = sigma;
  obj.ctx = ctx;
  return obj;
}

long family_guard_digits(int p, long trunc) {
  long digits = 3;
  for (long x = 1; x <= trunc; x *= p) ++digits;
  return digits;
}

FamilyData build_family(int p, const mpq_class& c, long trunc, long prec, std::optional<long> guard) {
  require_prime_at_least_5(p);
  if (trunc < 4) throw ConfigError("truncation order must be at least 4");
  if (prec < 2) throw ConfigError("precision must be at least 2");
  if (guard && *guard < 0) throw ConfigError("guard digits must be non-negative");
  FamilyData fam;
  fam.p = p;
  fam.c = c;
  fam.trunc = trunc;
  fam.prec = prec;
  fam.ctx = PadicContext{p, prec + guard.value_or(family_guard_digits(p, trunc))};
  const PadicContext& ctx = fam.ctx;
  fam.sigma = FrobeniusSpec::make(p, Padic::from_rational(p, c, ctx.prec));

  fam.F = hypergeometric_F(ctx, trunc + 1);
  const TatePeriod period = tate_period(trunc + 2);
  fam.q = period.q;
  fam.q0 = period.q0;
  const ESeries q0 = to_padic_series<Eis>(fam.q0, ctx).with_precision(ctx.prec);
  fam.dlog_q = (q0.log_deriv() + ESeries::monomial(ctx, rational(ctx, 1), -1)).truncate(trunc);

  fam.gm = gm_matrix();
  fam.gm_series = expand_matrix(fam.gm, ctx, trunc);
  fam.basis = hat_basis(fam.F);
  fam.hat_connection = change_basis(fam.gm_series, fam.basis);
  fam.tau = tau_sigma(q0, fam.sigma);
  fam.phi_hat = frobenius_hat(fam.tau);
  fam.phi_algebraic = frobenius_algebraic(fam.basis, fam.phi_hat, fam.sigma);
  return fam;
}

}  // namespace regkit
