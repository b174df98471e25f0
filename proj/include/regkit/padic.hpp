#pragma once

#include <gmpxx.h>

#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace regkit {

// Sentinel for "no precision bound" (exact values) and "infinite valuation"
// (exact zero). Saturating arithmetic keeps it from overflowing.
inline constexpr long kInfinite = std::numeric_limits<long>::max() / 4;

inline long sat_add(long a, long b) {
  if (a >= kInfinite || b >= kInfinite) return kInfinite;
  return a + b;
}

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotHenselLiftable : std::domain_error {
  using std::domain_error::domain_error;
};

/// p^k as a cached big integer. Thread-safe.
const mpz_class& prime_power(int p, long k);

/// v_p(n) for n != 0.
long valuation_of(const mpz_class& n, int p);

bool is_prime(long n);

/// Throws ConfigError unless p is a prime >= 5.
void require_prime_at_least_5(long p);

/// Element u * p^v of Q_p, known modulo p^prec.
///
/// Exact values (integers, or u * p^v with u an integer) carry no precision
/// bound and only arise from integer constructors. Every other value records
/// an absolute precision, and arithmetic derives the output precision from the
/// operands, so a result never claims more digits than its inputs justify.
/// A value that is zero modulo p^prec is an "inexact zero"; it is distinct
/// from the exact zero.
class Padic {
 public:
  Padic() = default;

  static Padic exact_zero(int p);
  static Padic zero(int p, long prec);
  static Padic from_int(int p, const mpz_class& n);
  static Padic from_int(int p, long n) { return from_int(p, mpz_class(n)); }
  static Padic from_rational(int p, const mpq_class& q, long prec);

  int prime() const { return p_; }
  bool is_exact() const { return exact_; }
  bool is_exact_zero() const { return exact_ && u_ == 0; }
  /// Zero to its known precision (exact zero included).
  bool is_zero() const { return u_ == 0; }
  /// kInfinite for the exact zero, prec for an inexact zero.
  long valuation() const { return v_; }
  /// kInfinite for exact values.
  long precision() const { return exact_ ? kInfinite : prec_; }
  long relative_precision() const;
  const mpz_class& unit() const { return u_; }
  bool is_unit() const { return !is_zero() && v_ == 0; }

  /// The value modulo p^n; requires valuation >= 0 and n <= precision.
  mpz_class residue(long n) const;
  /// Residue modulo p^precision (requires finite precision, v >= 0).
  mpz_class residue() const { return residue(prec_); }
  mpq_class to_rational() const;

  Padic with_precision(long n) const;

  Padic operator-() const;
  friend Padic operator+(const Padic& a, const Padic& b);
  friend Padic operator-(const Padic& a, const Padic& b) { return a + (-b); }
  friend Padic operator*(const Padic& a, const Padic& b);
  friend Padic operator/(const Padic& a, const Padic& b);
  Padic& operator+=(const Padic& o) { return *this = *this + o; }
  Padic& operator-=(const Padic& o) { return *this = *this - o; }
  Padic& operator*=(const Padic& o) { return *this = *this * o; }

  Padic inverse() const;
  Padic mul_int(const mpz_class& n) const;
  /// Division by a nonzero integer; precision drops by v_p(n).
  Padic div_int(const mpz_class& n) const;
  Padic pow(long e) const;

  /// True if a - b is zero modulo p^n and both are known to at least p^n.
  bool equals_mod(const Padic& o, long n) const;
  /// Representation equality (same value, same precision).
  friend bool operator==(const Padic& a, const Padic& b);

  std::string to_string() const;

 private:
  static Padic normalize(int p, mpz_class x, long shift, long prec);

  int p_ = 0;
  bool exact_ = true;
  long v_ = kInfinite;
  long prec_ = kInfinite;
  mpz_class u_ = 0;
};

/// a + b*nu in Z_p[nu] (tensor Q), nu^2 + nu + 1 = 0.
///
/// nu stays a formal symbol for every p; when p = 1 mod 3 the ring splits and
/// canonical_nu() gives the Hensel-lifted embedding.
class Eis {
 public:
  Eis() = default;
  Eis(Padic a, Padic b);

  static Eis exact_zero(int p) { return {Padic::exact_zero(p), Padic::exact_zero(p)}; }
  static Eis from_padic(const Padic& a) { return {a, Padic::exact_zero(a.prime())}; }
  static Eis from_int(int p, long a, long b = 0) { return {Padic::from_int(p, a), Padic::from_int(p, b)}; }
  static Eis nu(int p) { return from_int(p, 0, 1); }
  /// sqrt(-3) = 1 + 2 nu.
  static Eis sqrt_minus_3(int p) { return from_int(p, 1, 2); }

  int prime() const { return a_.prime(); }
  const Padic& a() const { return a_; }
  const Padic& b() const { return b_; }
  const Padic& nu_component() const { return b_; }

  bool is_exact_zero() const { return a_.is_exact_zero() && b_.is_exact_zero(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  long valuation() const;
  long precision() const;
  Padic norm() const;
  bool is_unit() const;

  Eis operator-() const { return {-a_, -b_}; }
  friend Eis operator+(const Eis& x, const Eis& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
  friend Eis operator-(const Eis& x, const Eis& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
  friend Eis operator*(const Eis& x, const Eis& y);
  friend Eis operator*(const Eis& x, const Padic& s) { return {x.a_ * s, x.b_ * s}; }
  friend Eis operator/(const Eis& x, const Eis& y) { return x * y.inverse(); }
  Eis& operator+=(const Eis& o) { return *this = *this + o; }
  Eis& operator-=(const Eis& o) { return *this = *this - o; }
  Eis& operator*=(const Eis& o) { return *this = *this * o; }

  Eis inverse() const;
  Eis div_int(const mpz_class& n) const { return {a_.div_int(n), b_.div_int(n)}; }
  Eis mul_int(const mpz_class& n) const { return {a_.mul_int(n), b_.mul_int(n)}; }
  Eis with_precision(long n) const { return {a_.with_precision(n), b_.with_precision(n)}; }
  Eis pow(long e) const;
  /// The involution nu -> nu^2 = -1 - nu.
  Eis conj() const;

  bool equals_mod(const Eis& o, long n) const { return a_.equals_mod(o.a_, n) && b_.equals_mod(o.b_, n); }
  friend bool operator==(const Eis& x, const Eis& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

  std::string to_string() const;

 private:
  Padic a_, b_;
};

/// log(u) for u = 1 mod p, correct modulo p^precision(u).
Padic padic_log(const Padic& u);
inline Padic padic_log(const Padic& u, long n) { return padic_log(u.with_precision(n)); }

/// Unique root r = r0 mod p of the integer polynomial f (coefficients in
/// increasing degree), correct modulo p^n.
Padic hensel_root(const std::vector<mpz_class>& f, const mpz_class& r0, int p, long n);

/// nu -> nu^p on coefficients: identity for p = 1 mod 3, conj for p = 2 mod 3.
Eis eis_frobenius(const Eis& z);

/// Hensel lift of the smallest r in [2, p-2] with r^2 + r + 1 = 0 mod p;
/// nullopt when p = 2 mod 3.
std::optional<Padic> canonical_nu(int p, long n);

/// Image of a + b nu in Z_p under nu -> root.
Padic embed(const Eis& z, const Padic& root);

}  // namespace regkit
