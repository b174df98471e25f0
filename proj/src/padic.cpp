#include "regkit/padic.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <sstream>

namespace regkit {

const mpz_class& prime_power(int p, long k) {
  static std::mutex mu;
  // deque::push_back keeps references to existing elements valid.
  static std::map<int, std::deque<mpz_class>> table;
  if (k < 0) throw std::logic_error("prime_power: negative exponent");
  std::lock_guard lock(mu);
  auto& pw = table[p];
  if (pw.empty()) pw.emplace_back(1);
  while (static_cast<long>(pw.size()) <= k) pw.push_back(pw.back() * p);
  return pw[static_cast<size_t>(k)];
}

long valuation_of(const mpz_class& n, int p) {
  if (n == 0) return kInfinite;
  mpz_class m = n;
  long k = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(p));
    ++k;
  }
  return k;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void require_prime_at_least_5(long p) {
  if (p < 5 || !is_prime(p)) throw ConfigError("p must be a prime >= 5, got " + std::to_string(p));
}

namespace {

mpz_class mod_pos(const mpz_class& x, const mpz_class& m) {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

mpz_class invert_mod(const mpz_class& x, const mpz_class& m) {
  mpz_class r;
  if (m == 1) return 0;
  if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0)
    throw DomainError("element is not invertible modulo p^k");
  return r;
}

// Strips the p-part of a nonzero integer; returns the exponent removed.
long strip(mpz_class& x, int p) {
  long k = 0;
  while (mpz_divisible_ui_p(x.get_mpz_t(), static_cast<unsigned long>(p))) {
    mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(p));
    ++k;
  }
  return k;
}

}  // namespace

Padic Padic::exact_zero(int p) {
  Padic z;
  z.p_ = p;
  return z;
}

Padic Padic::zero(int p, long prec) {
  Padic z;
  z.p_ = p;
  z.exact_ = false;
  z.v_ = prec;
  z.prec_ = prec;
  return z;
}

Padic Padic::from_int(int p, const mpz_class& n) {
  Padic z = exact_zero(p);
  if (n == 0) return z;
  z.u_ = n;
  z.v_ = strip(z.u_, p);
  return z;
}

Padic Padic::from_rational(int p, const mpq_class& q, long prec) {
  if (q == 0) return exact_zero(p);
  mpz_class num = q.get_num(), den = q.get_den();
  long v = strip(num, p) - strip(den, p);
  if (v >= prec) return zero(p, prec);
  const mpz_class& m = prime_power(p, prec - v);
  Padic z = exact_zero(p);
  z.exact_ = false;
  z.v_ = v;
  z.prec_ = prec;
  z.u_ = mod_pos(num * invert_mod(den, m), m);
  return z;
}

Padic Padic::normalize(int p, mpz_class x, long shift, long prec) {
  // Value x * p^shift known modulo p^prec (prec finite).
  if (shift >= prec) return zero(p, prec);
  x = mod_pos(x, prime_power(p, prec - shift));
  if (x == 0) return zero(p, prec);
  long k = strip(x, p);
  Padic z = exact_zero(p);
  z.exact_ = false;
  z.v_ = shift + k;
  z.prec_ = prec;
  z.u_ = mod_pos(x, prime_power(p, prec - z.v_));
  return z;
}

long Padic::relative_precision() const {
  if (exact_) return kInfinite;
  return prec_ - v_;
}

mpz_class Padic::residue(long n) const {
  if (is_zero()) return 0;
  if (v_ < 0) throw DomainError("residue of a non-integral p-adic number");
  if (n > precision()) throw DomainError("residue requested beyond known precision");
  if (v_ >= n) return 0;
  return mod_pos(u_ * prime_power(p_, v_), prime_power(p_, n));
}

mpq_class Padic::to_rational() const {
  if (is_zero()) return 0;
  mpq_class r(u_);
  if (v_ >= 0)
    r *= mpq_class(prime_power(p_, v_));
  else
    r /= mpq_class(prime_power(p_, -v_));
  return r;
}

Padic Padic::with_precision(long n) const {
  if (n >= precision()) return *this;
  if (is_exact_zero()) return zero(p_, n);
  if (v_ >= n) return zero(p_, n);
  Padic z = *this;
  z.exact_ = false;
  z.prec_ = n;
  z.u_ = mod_pos(u_, prime_power(p_, n - v_));
  return z;
}

Padic Padic::operator-() const {
  Padic z = *this;
  if (u_ == 0) return z;
  if (exact_)
    z.u_ = -u_;
  else
    z.u_ = mod_pos(-u_, prime_power(p_, prec_ - v_));
  return z;
}

Padic operator+(const Padic& a, const Padic& b) {
  const int p = a.p_ ? a.p_ : b.p_;
  if (a.is_exact_zero()) return b;
  if (b.is_exact_zero()) return a;
  if (a.exact_ && b.exact_) {
    long m = std::min(a.v_, b.v_);
    mpz_class x = a.u_ * prime_power(p, a.v_ - m) + b.u_ * prime_power(p, b.v_ - m);
    if (x == 0) return Padic::exact_zero(p);
    Padic z = Padic::exact_zero(p);
    long k = strip(x, p);
    z.u_ = x;
    z.v_ = m + k;
    return z;
  }
  long prec = std::min(a.precision(), b.precision());
  long m = std::min({a.v_, b.v_, prec});
  if (m >= prec) return Padic::zero(p, prec);
  mpz_class x = 0;
  if (a.u_ != 0 && a.v_ < prec) x += a.u_ * prime_power(p, a.v_ - m);
  if (b.u_ != 0 && b.v_ < prec) x += b.u_ * prime_power(p, b.v_ - m);
  return Padic::normalize(p, x, m, prec);
}

Padic operator*(const Padic& a, const Padic& b) {
  const int p = a.p_ ? a.p_ : b.p_;
  if (a.is_exact_zero() || b.is_exact_zero()) return Padic::exact_zero(p);
  if (a.exact_ && b.exact_) {
    Padic z = Padic::exact_zero(p);
    z.u_ = a.u_ * b.u_;
    z.v_ = a.v_ + b.v_;
    return z;
  }
  long v = a.v_ + b.v_;
  long prec = std::min(sat_add(a.precision(), b.v_), sat_add(b.precision(), a.v_));
  if (a.u_ == 0 || b.u_ == 0 || v >= prec) return Padic::zero(p, prec);
  Padic z = Padic::exact_zero(p);
  z.exact_ = false;
  z.v_ = v;
  z.prec_ = prec;
  z.u_ = mod_pos(a.u_ * b.u_, prime_power(p, prec - v));
  return z;
}

Padic Padic::inverse() const {
  if (is_zero()) throw DomainError("inverse of a p-adic zero");
  if (exact_) {
    if (u_ == 1 || u_ == -1) {
      Padic z = *this;
      z.v_ = -v_;
      return z;
    }
    throw std::logic_error("inverse of an exact non-unit integer needs a precision cap");
  }
  long rel = prec_ - v_;
  Padic z = *this;
  z.v_ = -v_;
  z.prec_ = -v_ + rel;
  z.u_ = invert_mod(u_, prime_power(p_, rel));
  return z;
}

Padic operator/(const Padic& a, const Padic& b) {
  if (b.exact_ && !a.exact_) {
    if (b.u_ == 0) throw DomainError("division by exact zero");
    Padic q = a.div_int(b.u_);
    // div_int charged v_p(u) = 0; now shift by p^(-v_b).
    if (q.u_ == 0) return Padic::zero(q.p_, q.prec_ - b.v_);
    q.v_ -= b.v_;
    q.prec_ -= b.v_;
    return q;
  }
  return a * b.inverse();
}

Padic Padic::mul_int(const mpz_class& n) const { return *this * from_int(p_, n); }

Padic Padic::div_int(const mpz_class& n) const {
  if (n == 0) throw DomainError("division by zero");
  mpz_class m = n;
  long k = strip(m, p_);
  if (is_exact_zero()) return *this;
  if (exact_) {
    if (m == 1 || m == -1) {
      Padic z = *this;
      z.u_ *= m;
      z.v_ -= k;
      return z;
    }
    throw std::logic_error("exact division by a non-unit integer needs a precision cap");
  }
  if (u_ == 0) return zero(p_, prec_ - k);
  Padic z = *this;
  z.v_ = v_ - k;
  z.prec_ = prec_ - k;
  const mpz_class& mod = prime_power(p_, prec_ - v_);
  z.u_ = mod_pos(u_ * invert_mod(m, mod), mod);
  return z;
}

Padic Padic::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Padic r = from_int(p_, 1), base = *this;
  while (e > 0) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

bool Padic::equals_mod(const Padic& o, long n) const {
  if (precision() < n || o.precision() < n) return false;
  Padic d = *this - o;
  return d.is_zero() || d.valuation() >= n;
}

bool operator==(const Padic& a, const Padic& b) {
  return a.exact_ == b.exact_ && a.u_ == b.u_ && (a.u_ == 0 ? a.precision() == b.precision()
                                                            : a.v_ == b.v_ && a.precision() == b.precision());
}

std::string Padic::to_string() const {
  std::ostringstream os;
  if (is_exact_zero()) return "0";
  if (u_ == 0) {
    os << "O(" << p_ << "^" << prec_ << ")";
    return os.str();
  }
  os << u_.get_str();
  if (v_ != 0) os << "*" << p_ << "^" << v_;
  if (!exact_) os << " + O(" << p_ << "^" << prec_ << ")";
  return os.str();
}

// ---------------------------------------------------------------- Eis

Eis::Eis(Padic a, Padic b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.prime() == 0) a_ = Padic::exact_zero(b_.prime());
  if (b_.prime() == 0) b_ = Padic::exact_zero(a_.prime());
}

Eis operator*(const Eis& x, const Eis& y) {
  // (a + b nu)(c + d nu) = (ac - bd) + (ad + bc - bd) nu
  Padic bd = x.b_ * y.b_;
  return {x.a_ * y.a_ - bd, x.a_ * y.b_ + x.b_ * y.a_ - bd};
}

long Eis::valuation() const { return std::min(a_.valuation(), b_.valuation()); }

long Eis::precision() const { return std::min(a_.precision(), b_.precision()); }

Padic Eis::norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

bool Eis::is_unit() const { return norm().is_unit(); }

Eis Eis::conj() const { return {a_ - b_, -b_}; }

Eis Eis::inverse() const {
  Padic n = norm();
  if (n.is_zero()) throw DomainError("inverse of a non-invertible element of Z_p[nu]");
  Padic ni = n.inverse();
  Eis c = conj();
  return {c.a_ * ni, c.b_ * ni};
}

Eis Eis::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Eis r = from_int(prime(), 1), base = *this;
  while (e > 0) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

std::string Eis::to_string() const { return "(" + a_.to_string() + ") + (" + b_.to_string() + ")*nu"; }

// ------------------------------------------------------------ functions

Padic padic_log(const Padic& u) {
  const int p = u.prime();
  require_prime_at_least_5(p);
  Padic x = u - Padic::from_int(p, 1);
  if (x.is_exact_zero()) return Padic::exact_zero(p);
  const long w = x.valuation();
  if (w < 1) throw DomainError("padic_log: argument is not 1 mod p");
  const long target = u.precision();
  if (target >= kInfinite) throw std::logic_error("padic_log: exact argument needs a precision cap");
  if (x.is_zero()) return Padic::zero(p, target);
  // Terms with n*w - v_p(n) >= target are dropped; find the last one kept and
  // the least valuation among dropped terms (the tail bound).
  long last = 1;
  for (long n = 1; n < 64 * (target + 2); ++n)
    if (n * w - valuation_of(n, p) < target) last = n;
  long tail = kInfinite;
  for (long n = last + 1; n <= last + 4 * p + 64; ++n) tail = std::min(tail, n * w - valuation_of(n, p));
  Padic sum = Padic::exact_zero(p);
  Padic xn = Padic::from_int(p, 1);
  for (long n = 1; n <= last; ++n) {
    xn *= x;
    Padic term = xn.div_int(n);
    sum = (n % 2 == 1) ? sum + term : sum - term;
  }
  return sum.with_precision(tail);
}

Padic hensel_root(const std::vector<mpz_class>& f, const mpz_class& r0, int p, long n) {
  auto eval = [&](const mpz_class& r, const mpz_class& m) {
    mpz_class acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = mod_pos(acc * r + *it, m);
    return acc;
  };
  auto eval_deriv = [&](const mpz_class& r, const mpz_class& m) {
    mpz_class acc = 0;
    for (size_t k = f.size(); k-- > 1;) acc = mod_pos(acc * r + f[k] * static_cast<unsigned long>(k), m);
    return acc;
  };
  const mpz_class& mp = prime_power(p, 1);
  if (eval(r0, mp) != 0) throw NotHenselLiftable("seed is not a root modulo p");
  if (eval_deriv(r0, mp) == 0) throw NotHenselLiftable("not Hensel-liftable: f'(r0) = 0 mod p");
  mpz_class r = mod_pos(r0, mp);
  long k = 1;
  while (k < n) {
    k = std::min(2 * k, n);
    const mpz_class& m = prime_power(p, k);
    r = mod_pos(r - eval(r, m) * invert_mod(eval_deriv(r, m), m), m);
  }
  return Padic::from_rational(p, mpq_class(r), n);
}

Eis eis_frobenius(const Eis& z) { return z.prime() % 3 == 1 ? z : z.conj(); }

std::optional<Padic> canonical_nu(int p, long n) {
  if (p % 3 != 1) return std::nullopt;
  for (long r = 2; r <= p - 2; ++r)
    if ((r * r + r + 1) % p == 0) return hensel_root({1, 1, 1}, r, p, n);
  throw std::logic_error("no cube root of unity modulo p");
}

Padic embed(const Eis& z, const Padic& root) { return z.a() + z.b() * root; }

}  // namespace regkit
