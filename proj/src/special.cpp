#include "regkit/special.hpp"

#include <cmath>

namespace regkit {

std::vector<mpq_class> hypergeometric_2f1_coeffs(long m) {
  std::vector<mpq_class> a;
  if (m <= 0) return a;
  a.emplace_back(1);
  for (long n = 1; n < m; ++n) {
    mpq_class f = (mpq_class(3 * n - 2, 3) * mpq_class(3 * n - 1, 3)) / mpq_class(n * n);
    a.push_back(a.back() * f);
  }
  return a;
}

ESeries hypergeometric_F(const PadicContext& ctx, long m) {
  require_prime_at_least_5(ctx.p);
  const ESeries base = ESeries::from_rationals(ctx, hypergeometric_2f1_coeffs(m), m);
  const Eis scale = Eis::sqrt_minus_3(ctx.p) * Padic::from_rational(ctx.p, mpq_class(-1, 6), ctx.prec);
  return base * scale;
}

QSeries polylog_series_exact(long r, int p, long m) {
  std::vector<mpq_class> cs(static_cast<size_t>(std::max(0L, m)));
  for (long n = 1; n < m; ++n) {
    if (n % p == 0) continue;
    mpz_class np;
    mpz_pow_ui(np.get_mpz_t(), mpz_class(n).get_mpz_t(), static_cast<unsigned long>(std::labs(r)));
    cs[static_cast<size_t>(n)] = r >= 0 ? mpq_class(1) / mpq_class(np) : mpq_class(np);
  }
  return QSeries::from_rationals(NoContext{}, cs, m);
}

PSeries polylog_series(long r, const PadicContext& ctx, long m) {
  return to_padic_series<Padic>(polylog_series_exact(r, ctx.p, m), ctx);
}

// ------------------------------------------------------------- x-form

namespace {

long floor_log(long n, int p) {
  long k = 0;
  for (long q = p; q <= n; q *= p) ++k;
  return k;
}

// Valuation bound for the n-th term of ln_r after r - 1 integrations.
long term_bound(long n, long r, int p) {
  return n - 1 - valuation_of(n, p) - (r - 1) * floor_log(n * (p - 1) + r, p);
}

mpq_class qpoly_sum(const QPoly& f) {
  mpq_class s = 0;
  for (const auto& c : f.coeffs()) s += c;
  return s;
}

long rational_valuation(const mpq_class& q, int p) {
  if (q == 0) return kInfinite;
  return valuation_of(q.get_num(), p) - valuation_of(q.get_den(), p);
}

}  // namespace

PolylogXForm polylog_xform(long r, int p, long n, long trunc_x) {
  require_prime_at_least_5(p);
  if (r < 1) throw DomainError("polylog_xform needs r >= 1");
  long last = 1;
  for (long k = 1; k < 64 * (n + r + 3) + 200; ++k)
    if (term_bound(k, r, p) < n) last = k;
  long tail = kInfinite;
  for (long k = last + 1; k <= last + 4 * p + 64; ++k) tail = std::min(tail, term_bound(k, r, p));

  const QPoly x = QPoly::x();
  const QPoly one(mpq_class(1));
  QPoly w = (one - x.pow(p) + (x - one).pow(p)).scale(mpq_class(1, p));
  QPoly ln;  // ln_1 partial sum
  QPoly wn = one;
  mpz_class pk = 1;  // p^(k-1)
  for (long k = 1; k <= last; ++k) {
    wn = wn * w;
    ln -= wn.scale(mpq_class(pk) / k);
    pk *= p;
  }

  const long max_deg_loss = floor_log(last * (p - 1) + r, p);
  long rem_bound = kInfinite;
  for (long k = 1; k < r; ++k) {
    // g = ln_k / (x (x - 1)); ln_(k+1) = integral of g with constant 0.
    if (ln.coeff(0) != 0) throw std::logic_error("x-form partial sum does not vanish at x = 0");
    std::vector<mpq_class> over_x(ln.coeffs().begin() + (ln.is_zero() ? 0 : 1), ln.coeffs().end());
    // Synthetic division by (x - 1).
    const long d = static_cast<long>(over_x.size()) - 1;
    std::vector<mpq_class> quo(static_cast<size_t>(std::max(0L, d)));
    mpq_class carry = 0;
    for (long i = d; i >= 0; --i) {
      carry = carry + over_x[static_cast<size_t>(i)];
      if (i > 0) quo[static_cast<size_t>(i - 1)] = carry;
    }
    rem_bound = std::min(rem_bound, rational_valuation(carry, p) - (r - k) * max_deg_loss);
    std::vector<mpq_class> next(quo.size() + 1);
    for (size_t i = 0; i < quo.size(); ++i) next[i + 1] = quo[i] / static_cast<long>(i + 1);
    ln = QPoly(std::move(next));
  }

  PolylogXForm out;
  out.p = p;
  out.r = r;
  out.trunc_x = trunc_x;
  out.precision = std::min({tail, rem_bound, n + 8});
  for (const auto& c : ln.coeffs()) out.coeffs.push_back(Padic::from_rational(p, c, out.precision));
  for (long d = trunc_x; d <= out.degree(); ++d) {
    const Padic& c = out.coeffs[static_cast<size_t>(d)];
    if (c.is_exact_zero()) continue;
    out.dropped_valuation = std::min(out.dropped_valuation, c.valuation());
  }
  return out;
}

PSeries PolylogXForm::truncated() const {
  std::vector<Padic> cs(coeffs.begin(), coeffs.begin() + std::min<long>(trunc_x, degree() + 1));
  return PSeries(PadicContext{p, precision}, 0, std::move(cs), trunc_x);
}

Padic PolylogXForm::value_at_one() const {
  Padic s = Padic::exact_zero(p);
  for (const auto& c : coeffs) s += c;
  return s;
}

Eis PolylogXForm::eval(const Eis& x) const {
  Eis acc = Eis::exact_zero(p);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + Eis::from_padic(*it);
  return acc;
}

PSeries PolylogXForm::in_z(long m) const {
  const PadicContext ctx{p, precision};
  std::vector<Padic> ones(static_cast<size_t>(m), Padic::from_int(p, 1));
  const PSeries x(ctx, 0, std::move(ones), m);
  PSeries acc(ctx, m);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + PSeries::constant(ctx, *it);
  return acc;
}

Eis polylog_eval_xform(long r, const Eis& z, long n) {
  const int p = z.prime();
  const Eis one_minus_z = Eis::from_int(p, 1) - z;
  if (!one_minus_z.is_unit()) throw DomainError("polylog: 1 - z is not a unit (inside the bad residue disk)");
  const Eis x = (one_minus_z.precision() >= kInfinite ? one_minus_z.with_precision(n + 2) : one_minus_z).inverse();
  return polylog_xform(r, p, n, 0).eval(x);
}

// ------------------------------------------------------- limit formula

namespace {

using u64 = unsigned long long;
using u128 = unsigned __int128;

struct ModEis {
  u64 a, b;
};

struct ModRing {
  u64 m;
  u64 mul(u64 x, u64 y) const { return static_cast<u64>((static_cast<u128>(x) * y) % m); }
  u64 add(u64 x, u64 y) const { return static_cast<u64>((static_cast<u128>(x) + y) % m); }
  u64 sub(u64 x, u64 y) const { return x >= y ? x - y : m - (y - x); }
  ModEis mul(ModEis x, ModEis y) const {
    const u64 bd = mul(x.b, y.b);
    return {sub(mul(x.a, y.a), bd), sub(add(mul(x.a, y.b), mul(x.b, y.a)), bd)};
  }
  ModEis add(ModEis x, ModEis y) const { return {add(x.a, y.a), add(x.b, y.b)}; }
  ModEis scale(ModEis x, u64 s) const { return {mul(x.a, s), mul(x.b, s)}; }
  u64 inv(u64 x) const {
    long long t = 0, nt = 1;
    long long r = static_cast<long long>(m), nr = static_cast<long long>(x % m);
    while (nr != 0) {
      long long q = r / nr;
      long long tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    if (r != 1) throw DomainError("limit formula: element not invertible");
    return static_cast<u64>(t < 0 ? t + static_cast<long long>(m) : t);
  }
  u64 pow(u64 x, long e) const {
    u64 r = 1 % m;
    while (e > 0) {
      if (e & 1) r = mul(r, x);
      x = mul(x, x);
      e >>= 1;
    }
    return r;
  }
  ModEis inv(ModEis x) const {
    // conj / norm
    const u64 norm = add(sub(mul(x.a, x.a), mul(x.a, x.b)), mul(x.b, x.b));
    const u64 ni = inv(norm);
    return {mul(sub(x.a, x.b), ni), mul(sub(0, x.b), ni)};
  }
};

u64 residue_u64(const Padic& x, long w) { return x.residue(w).get_ui(); }

}  // namespace

long polylog_depth_for_budget(int p, long budget) {
  long s = 1;
  long pw = p;
  while (pw <= budget / p) {
    pw *= p;
    ++s;
  }
  return std::max(2L, s);
}

PolylogLimit polylog_eval(long r, const Eis& z, long s) {
  const int p = z.prime();
  require_prime_at_least_5(p);
  if (s < 2) throw ConfigError("polylog limit depth s must be >= 2");
  const Eis one_minus_z = Eis::from_int(p, 1) - z;
  if (!one_minus_z.is_unit()) throw DomainError("polylog: 1 - z is not a unit (inside the bad residue disk)");
  if (!z.is_unit()) throw DomainError("polylog: z is not a unit");
  long w = std::min(s + 2, z.precision());
  mpz_class mbig = prime_power(p, w);
  while (w > 1 && mpz_sizeinbase(mbig.get_mpz_t(), 2) > 62) mbig = prime_power(p, --w);
  const ModRing R{mbig.get_ui()};
  const ModEis zz{residue_u64(z.a(), w), residue_u64(z.b(), w)};

  u64 ps1 = 1;
  for (long i = 0; i < s - 1; ++i) ps1 *= static_cast<u64>(p);
  const u64 ps = ps1 * static_cast<u64>(p);

  ModEis zn{1 % R.m, 0}, sum{0, 0}, sum_prev{0, 0}, z_ps1{0, 0};
  for (u64 n = 1; n < ps; ++n) {
    zn = R.mul(zn, zz);
    if (n == ps1) z_ps1 = zn;
    if (n % static_cast<u64>(p) != 0) {
      const u64 nm = n % R.m;
      const u64 coeff = r >= 0 ? R.pow(R.inv(nm), r) : R.pow(nm, -r);
      sum = R.add(sum, R.scale(zn, coeff));
    }
    if (n == ps1 - 1) sum_prev = sum;
  }
  const ModEis z_ps = R.mul(zn, zz);
  auto finish = [&](ModEis partial, ModEis zpow) {
    const ModEis denom{R.sub(1 % R.m, zpow.a), R.sub(0, zpow.b)};
    const ModEis v = R.mul(R.inv(denom), partial);
    return Eis(Padic::from_rational(p, mpq_class(mpz_class(static_cast<unsigned long>(v.a))), w),
               Padic::from_rational(p, mpq_class(mpz_class(static_cast<unsigned long>(v.b))), w));
  };
  if (s - 1 == 0) z_ps1 = zz;

  PolylogLimit out;
  out.s = s;
  out.working_precision = w;
  const Eis cur = finish(sum, z_ps);
  out.raw = cur;
  out.previous = finish(sum_prev, z_ps1);
  const Eis diff = cur - out.previous;
  const long v = diff.is_zero() ? w : std::min(diff.valuation(), w);
  out.delta = std::clamp(s - v, 0L, s);
  out.claimed_precision = s - out.delta;
  out.value = cur.with_precision(out.claimed_precision);
  return out;
}

// ------------------------------------------------------ j and q(t)

namespace {

QSeries eta_product_24(long m) {
  // prod_{n >= 1} (1 - q^n)^24 mod q^m
  QSeries prod = QSeries::one(NoContext{}).truncate(m);
  for (long n = 1; n < m; ++n) {
    QSeries factor = QSeries::from_rationals(NoContext{}, {1}, m) - QSeries::monomial(NoContext{}, 1, n, m);
    prod = prod * factor;
  }
  return prod.pow(24).truncate(m);
}

QSeries eisenstein_e4(long m) {
  std::vector<mpq_class> cs(static_cast<size_t>(m));
  if (m > 0) cs[0] = 1;
  for (long n = 1; n < m; ++n) {
    mpz_class s3 = 0;
    for (long d = 1; d <= n; ++d)
      if (n % d == 0) s3 += mpz_class(d) * d * d;
    cs[static_cast<size_t>(n)] = 240 * mpq_class(s3);
  }
  return QSeries::from_rationals(NoContext{}, cs, m);
}

}  // namespace

QSeries j_q_expansion(long m) {
  const QSeries e4 = eisenstein_e4(m + 1);
  const QSeries delta_over_q = eta_product_24(m + 1);
  return (e4.pow(3) * delta_over_q.inverse()).truncate(m + 1).shift(-1);
}

QSeries j_of_family(long m) {
  const NoContext q{};
  const QSeries num = QSeries::from_rationals(q, {27, 27 * 24, 27 * 192, 27 * 512});
  const QSeries den = QSeries::from_rationals(q, {1, -3, 3, -1});
  return (num * den.inverse(m + 1)).truncate(m + 1).shift(-1);
}

TatePeriod tate_period(long m) {
  const NoContext q{};
  // phi(q) = 1/j(q) = q * Delta/q / E4^3, known mod q^m.
  const QSeries phi = (eisenstein_e4(m - 1).pow(3).inverse() * eta_product_24(m - 1)).shift(1);
  const QSeries psi = phi.reversion();
  // 1/j(t) = t (1 - t)^3 / (27 (1 + 8 t)^3)
  const QSeries num = QSeries::from_rationals(q, {0, 1, -3, 3, -1});
  const QSeries den = QSeries::from_rationals(q, {27, 27 * 24, 27 * 192, 27 * 512});
  const QSeries s = (num * den.inverse(m)).truncate(m);
  TatePeriod out;
  out.q = psi.compose(s).truncate(m);
  out.q0 = (out.q * mpq_class(27)).shift(-1);
  const std::vector<std::pair<long, mpq_class>> printed = {
      {2, mpq_class(250289, 243)}, {3, mpq_class(-5507717, 243)}, {4, mpq_class(25287001, 81)}};
  for (const auto& [e, val] : printed) {
    if (e >= m) continue;
    PrintedCoefficient pc{e, val, out.q[e], out.q[e] == val};
    out.printed.push_back(pc);
  }
  return out;
}

}  // namespace regkit
