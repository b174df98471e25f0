#pragma once

#include <string>
#include <vector>

#include "regkit/matrix.hpp"
#include "regkit/series.hpp"

namespace regkit {

using SeriesMatrix = Matrix<ESeries>;

/// Filtered F-isocrystal presented on a free basis.
///
/// Conventions: nabla(e_j) = sum_i connection(i, j) dt (x) e_i and
/// Phi(e_j) = sum_i frobenius(i, j) e_i; e_i lies in Fil^jumps[i] but not in
/// Fil^(jumps[i] + 1).
struct FilFMIC {
  std::vector<std::string> labels;
  SeriesMatrix connection;
  SeriesMatrix frobenius;
  std::vector<long> jumps;
  FrobeniusSpec sigma;
  PadicContext ctx;

  size_t rank() const { return labels.size(); }
};

FilFMIC make_tate(long r, const FrobeniusSpec& sigma, const PadicContext& ctx);

/// Log(f) on (e0, e-2) for f = t^k u with u a unit.
FilFMIC make_log(const ESeries& f, const FrobeniusSpec& sigma);

enum class PolylogFrobenius {
  Diagonal,  ///< Phi(e_-2j) = p^-j e_-2j
  Printed,   ///< Phi(e_-2j) = p^-j e_0, which is not horizontal
};

/// Pol_n(T) over the T-disk with sigma(T) = T^p, entries mod T^trunc.
FilFMIC make_polylog(long n, const PadicContext& ctx, long trunc,
                     PolylogFrobenius variant = PolylogFrobenius::Diagonal);

/// Log(q) for a symmetric g x g matrix of series, each t^k times a unit.
FilFMIC make_log_matrix(const SeriesMatrix& q, const FrobeniusSpec& sigma);

FilFMIC tensor(const FilFMIC& a, const FilFMIC& b);
FilFMIC twist(const FilFMIC& a, long r);

/// sigma^*(a dt) = a^sigma * c p t^(p-1) dt.
ESeries pullback_form(const ESeries& a, const FrobeniusSpec& sigma);

/// dPhi + A Phi - Phi sigma^*(A).
SeriesMatrix horizontality_residual(const FilFMIC& obj);

bool check_transversality(const FilFMIC& obj);

struct ResidualCheck {
  bool vanishes = true;
  /// Least truncation order and coefficient precision over the checked range.
  long trunc = kInfinite;
  long precision = kInfinite;
  std::string detail;
};

/// Every coefficient below t^m of every entry is zero mod p^n, and is known
/// to at least that precision.
ResidualCheck check_vanishes(const SeriesMatrix& r, long n, long m);

/// Digits to which every coefficient of s below t^m is known to vanish
/// (coefficient precision caps the count; -1 when s is truncated below t^m).
long vanishing_digits(const ESeries& s, long m);

/// Adds p^k t to Phi(i, j).
FilFMIC corrupt_frobenius(const FilFMIC& obj, size_t i, size_t j, long k);

}  // namespace regkit
