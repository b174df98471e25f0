#include "regkit/series.hpp"

namespace regkit {

FrobeniusSpec FrobeniusSpec::make(int p, const Padic& c, bool coefficient_frobenius) {
  require_prime_at_least_5(p);
  if (c.prime() != p) throw ConfigError("Frobenius constant lives over a different prime");
  if (!c.is_unit()) throw ConfigError("Frobenius constant c must be a p-adic unit");
  if (!(c - Padic::from_int(p, 1)).is_zero() && (c - Padic::from_int(p, 1)).valuation() < 1)
    throw ConfigError("Frobenius constant c must be 1 mod p");
  return FrobeniusSpec{p, c, coefficient_frobenius};
}

}  // namespace regkit
