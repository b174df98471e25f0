#include "regkit/filfmic.hpp"

#include <sstream>

#include "regkit/special.hpp"

namespace regkit {

namespace {

ESeries zero_series(const PadicContext& ctx) { return ESeries(ctx, kInfinite); }

ESeries constant_series(const PadicContext& ctx, const Padic& c) { return ESeries::constant(ctx, Eis::from_padic(c)); }

Padic inverse_prime_power(int p, long j) {
  Padic x = Padic::from_int(p, 1);
  for (long i = 0; i < j; ++i) x = x.div_int(p);
  return x;
}

Padic prime_power_padic(int p, long r) {
  return r >= 0 ? Padic::from_int(p, prime_power(p, r)) : inverse_prime_power(p, -r);
}

SeriesMatrix zeros(size_t n, const PadicContext& ctx) { return SeriesMatrix(n, n, zero_series(ctx)); }

}  // namespace

FilFMIC make_tate(long r, const FrobeniusSpec& sigma, const PadicContext& ctx) {
  FilFMIC obj;
  obj.labels = {"e"};
  obj.connection = zeros(1, ctx);
  obj.frobenius = zeros(1, ctx);
  obj.frobenius(0, 0) = constant_series(ctx, prime_power_padic(ctx.p, -r));
  obj.jumps = {-r};
  obj.sigma = sigma;
  obj.ctx = ctx;
  return obj;
}

FilFMIC make_log(const ESeries& f, const FrobeniusSpec& sigma) {
  const PadicContext& ctx = f.context();
  FilFMIC obj;
  obj.labels = {"e0", "e-2"};
  obj.connection = zeros(2, ctx);
  obj.connection(1, 0) = f.log_deriv();
  obj.frobenius = zeros(2, ctx);
  obj.frobenius(0, 0) = ESeries::one(ctx);
  obj.frobenius(1, 0) = -log_sigma(f, sigma);
  obj.frobenius(1, 1) = constant_series(ctx, inverse_prime_power(ctx.p, 1));
  obj.jumps = {0, -1};
  obj.sigma = sigma;
  obj.ctx = ctx;
  return obj;
}

FilFMIC make_polylog(long n, const PadicContext& ctx, long trunc, PolylogFrobenius variant) {
  if (n < 1) throw DomainError("make_polylog needs n >= 1");
  const int p = ctx.p;
  const size_t g = static_cast<size_t>(n) + 1;
  FilFMIC obj;
  obj.sigma = FrobeniusSpec::make(p, Padic::from_int(p, 1));
  obj.ctx = ctx;
  for (long j = 0; j <= n; ++j) {
    obj.labels.push_back(j == 0 ? "e0" : "e-" + std::to_string(2 * j));
    obj.jumps.push_back(-j);
  }
  obj.connection = zeros(g, ctx);
  obj.frobenius = zeros(g, ctx);
  const ESeries one = ESeries::one(ctx);
  const ESeries t = ESeries::variable(ctx);
  // 1/(T - 1) = -(1 + T + T^2 + ...)
  obj.connection(1, 0) = (t - one).inverse(trunc);
  for (size_t j = 1; j + 1 < g; ++j) obj.connection(j + 1, j) = ESeries::monomial(ctx, Eis::from_int(p, 1), -1);

  obj.frobenius(0, 0) = one;
  for (long j = 1; j <= n; ++j) {
    const ESeries ln = to_padic_series<Eis>(polylog_series_exact(j, p, trunc), ctx);
    // Phi(e0) = e0 - sum_j (-1)^j ln_j e_-2j
    obj.frobenius(static_cast<size_t>(j), 0) = (j % 2 == 0) ? -ln : ln;
    const ESeries scale = constant_series(ctx, inverse_prime_power(p, j));
    if (variant == PolylogFrobenius::Diagonal)
      obj.frobenius(static_cast<size_t>(j), static_cast<size_t>(j)) = scale;
    else
      obj.frobenius(0, static_cast<size_t>(j)) = scale;
  }
  return obj;
}

FilFMIC make_log_matrix(const SeriesMatrix& q, const FrobeniusSpec& sigma) {
  const size_t g = q.rows();
  if (g == 0 || q.cols() != g) throw DomainError("make_log_matrix needs a square matrix");
  for (size_t i = 0; i < g; ++i)
    for (size_t j = i + 1; j < g; ++j)
      if (!(q(i, j) == q(j, i))) throw DomainError("make_log_matrix: input matrix is not symmetric");
  const PadicContext& ctx = q(0, 0).context();
  FilFMIC obj;
  obj.sigma = sigma;
  obj.ctx = ctx;
  for (size_t i = 0; i < g; ++i) {
    obj.labels.push_back("e" + std::to_string(i + 1));
    obj.jumps.push_back(0);
  }
  for (size_t j = 0; j < g; ++j) {
    obj.labels.push_back("f" + std::to_string(j + 1));
    obj.jumps.push_back(-1);
  }
  obj.connection = zeros(2 * g, ctx);
  obj.frobenius = zeros(2 * g, ctx);
  const ESeries pinv = constant_series(ctx, inverse_prime_power(ctx.p, 1));
  for (size_t i = 0; i < g; ++i) {
    obj.frobenius(i, i) = ESeries::one(ctx);
    obj.frobenius(g + i, g + i) = pinv;
    for (size_t j = 0; j < g; ++j) {
      obj.connection(g + j, i) = q(i, j).log_deriv();
      obj.frobenius(g + j, i) = -log_sigma(q(i, j), sigma);
    }
  }
  return obj;
}

FilFMIC tensor(const FilFMIC& a, const FilFMIC& b) {
  if (a.sigma.p != b.sigma.p) throw DomainError("tensor: objects over different primes");
  const PadicContext& ctx = a.ctx;
  const ESeries zero = zero_series(ctx);
  const ESeries one = ESeries::one(ctx);
  FilFMIC out;
  out.sigma = a.sigma;
  out.ctx = ctx;
  for (size_t i = 0; i < a.rank(); ++i)
    for (size_t k = 0; k < b.rank(); ++k) {
      out.labels.push_back(a.labels[i] + "*" + b.labels[k]);
      out.jumps.push_back(a.jumps[i] + b.jumps[k]);
    }
  const auto ia = SeriesMatrix::identity(a.rank(), zero, one);
  const auto ib = SeriesMatrix::identity(b.rank(), zero, one);
  out.connection = SeriesMatrix::kronecker(a.connection, ib, zero) + SeriesMatrix::kronecker(ia, b.connection, zero);
  out.frobenius = SeriesMatrix::kronecker(a.frobenius, b.frobenius, zero);
  return out;
}

FilFMIC twist(const FilFMIC& a, long r) { return tensor(a, make_tate(r, a.sigma, a.ctx)); }

ESeries pullback_form(const ESeries& a, const FrobeniusSpec& sigma) {
  if (a.is_exact() && a.valuation() >= kInfinite) return a;
  const Padic cp = sigma.c * Padic::from_int(sigma.p, sigma.p);
  return substitute_sigma(a, sigma).shift(sigma.p - 1) * Eis::from_padic(cp);
}

SeriesMatrix horizontality_residual(const FilFMIC& obj) {
  const ESeries zero = zero_series(obj.ctx);
  const SeriesMatrix sa = obj.connection.map([&](const ESeries& a) { return pullback_form(a, obj.sigma); });
  const SeriesMatrix dphi = obj.frobenius.map([](const ESeries& a) { return a.derivative(); });
  return dphi + SeriesMatrix::multiply(obj.connection, obj.frobenius, zero) -
         SeriesMatrix::multiply(obj.frobenius, sa, zero);
}

bool check_transversality(const FilFMIC& obj) {
  for (size_t i = 0; i < obj.rank(); ++i)
    for (size_t j = 0; j < obj.rank(); ++j)
      if (!obj.connection(i, j).is_zero() && obj.jumps[i] < obj.jumps[j] - 1) return false;
  return true;
}

ResidualCheck check_vanishes(const SeriesMatrix& r, long n, long m) {
  ResidualCheck out;
  auto fail = [&](const std::string& msg) {
    if (out.vanishes) out.detail = msg;
    out.vanishes = false;
  };
  for (size_t i = 0; i < r.rows(); ++i)
    for (size_t j = 0; j < r.cols(); ++j) {
      const ESeries& s = r(i, j);
      std::ostringstream where;
      where << "entry (" << i << "," << j << ")";
      out.trunc = std::min(out.trunc, s.trunc());
      if (s.trunc() < m) fail(where.str() + " is only known mod t^" + std::to_string(s.trunc()));
      for (long e = s.low(); e < std::min(m, s.end()); ++e) {
        const Eis c = s[e];
        out.precision = std::min(out.precision, c.precision());
        if (c.precision() < n)
          fail(where.str() + " coefficient of t^" + std::to_string(e) + " is only known mod p^" +
               std::to_string(c.precision()));
        else if (!c.is_zero() && c.valuation() < n)
          fail(where.str() + " coefficient of t^" + std::to_string(e) + " has valuation " +
               std::to_string(c.valuation()));
      }
    }
  return out;
}

long vanishing_digits(const ESeries& s, long m) {
  if (s.trunc() < m) return -1;
  long out = kInfinite;
  for (long e = s.low(); e < std::min(m, s.end()); ++e) {
    const Eis c = s[e];
    out = std::min(out, c.is_zero() ? c.precision() : std::min(c.valuation(), c.precision()));
  }
  return out;
}

FilFMIC corrupt_frobenius(const FilFMIC& obj, size_t i, size_t j, long k) {
  FilFMIC out = obj;
  const Padic pk = Padic::from_int(obj.ctx.p, prime_power(obj.ctx.p, k));
  out.frobenius(i, j) = out.frobenius(i, j) + ESeries::monomial(obj.ctx, Eis::from_padic(pk), 1);
  return out;
}

}  // namespace regkit
