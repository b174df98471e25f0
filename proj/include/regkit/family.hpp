#pragma once

#include <optional>

#include "regkit/filfmic.hpp"
#include "regkit/matrix.hpp"
#include "regkit/ratfunc.hpp"
#include "regkit/series.hpp"

namespace regkit {

// The family y^2 = x^3 + (3x + 4(1 - t))^2 with omega = dx/y, eta = x dx/y.

using RatMatrix = Matrix<RatFunc>;

/// Gauss-Manin connection on (omega, eta) as coefficients of dt, in the
/// convention nabla(e_j) = sum_i A(i, j) dt e_i.
RatMatrix gm_matrix();

/// Laurent expansion of an exact rational function at t = 0, mod t^m.
QSeries expand_at_zero(const RatFunc& f, long m);

/// Expands each entry mod t^m over the context.
SeriesMatrix expand_matrix(const RatMatrix& a, const PadicContext& ctx, long m);

/// P with (w_hat, eta_hat) = (omega, eta) P, built from F mod t^trunc(F).
SeriesMatrix hat_basis(const ESeries& F);

/// P^-1 (A P + dP): the connection in the transformed basis.
SeriesMatrix change_basis(const SeriesMatrix& connection, const SeriesMatrix& basis);

/// 2 x 2 inverse through the adjugate.
SeriesMatrix inverse_2x2(const SeriesMatrix& m);

/// dt / (12 (t^2 - t) F^2).
ESeries hat_connection_form(const ESeries& F);

/// -p^-1 log(27^(p-1) c) + log_sigma(q0).
ESeries tau_sigma(const ESeries& q0, const FrobeniusSpec& sigma);

/// [[p, 0], [-p tau, 1]].
SeriesMatrix frobenius_hat(const ESeries& tau);

/// P Phi_hat sigma(P)^-1.
SeriesMatrix frobenius_algebraic(const SeriesMatrix& basis, const SeriesMatrix& phi_hat, const FrobeniusSpec& sigma);

struct FamilyData {
  int p = 0;
  mpq_class c;
  FrobeniusSpec sigma;
  long trunc = 0;  ///< M
  long prec = 0;   ///< N, the requested precision
  PadicContext ctx;  ///< working context, prec >= N

  ESeries F;        ///< mod t^(M + 1)
  QSeries q;        ///< exact rationals, mod t^(M + 2)
  QSeries q0;       ///< 27 q / t
  ESeries dlog_q;   ///< dq/q, mod t^M
  RatMatrix gm;
  SeriesMatrix gm_series;
  SeriesMatrix basis;           ///< P
  SeriesMatrix hat_connection;  ///< P^-1 (A P + dP)
  ESeries tau;
  SeriesMatrix phi_hat;
  SeriesMatrix phi_algebraic;

  /// (w_hat, eta_hat) with the hat connection, Phi_hat and jumps (1, 0).
  FilFMIC hat_object() const;
  /// (omega, eta) with the Gauss-Manin connection and P Phi_hat sigma(P)^-1.
  FilFMIC algebraic_object() const;
};

/// Guard digits carried beyond N by build_family.
long family_guard_digits(int p, long trunc);

/// Builds everything for sigma(t) = c t^p. c must be a rational unit with c = 1 mod p.
/// The working precision is prec + guard (family_guard_digits by default).
FamilyData build_family(int p, const mpq_class& c, long trunc, long prec, std::optional<long> guard = std::nullopt);

}  // namespace regkit
