#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "regkit/family.hpp"

namespace regkit {

/// Evaluation of the regulator series at a point of the unit disk.
struct UnsupportedEvaluation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Some coefficient is known to fewer digits than requested.
struct PrecisionExhausted : std::runtime_error {
  PrecisionExhausted(const std::string& what, std::string series_name, long coefficient, long precision)
      : std::runtime_error(what), series(std::move(series_name)), exponent(coefficient), available(precision) {}
  std::string series;
  long exponent;
  long available;
};

/// An identity that the construction guarantees failed to hold.
struct ConsistencyFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Which global sign the packaged regulator uses.
enum class SignConvention { Corollary, Intro };

std::string to_string(SignConvention s);

struct Audit {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct E2InitialValue {
  Eis value;            ///< -9 ln_2(-nu) from the x-form
  long precision = 0;
  long limit_depth = 0; ///< s of the limit-formula cross-check
  long limit_delta = 0;
  long limit_claimed = 0;
  long agreement = 0;   ///< digits shared by the x-form and the limit value
};

/// -9 ln_2(z) at z = -nu (or -nu^2 when conjugate) to n digits, cross-checked
/// against the limit formula at depth s.
E2InitialValue e2_initial_value(int p, long n, long s, bool conjugate = false);

/// Inputs of the two differential equations.
struct PipelineInputs {
  ESeries F;
  ESeries dlog_q;
  ESeries tau;
  FrobeniusSpec sigma;
  long trunc = 0;
};

PipelineInputs pipeline_inputs(const FamilyData& fam);

/// c t^(p-1) / (c t^p - 1) mod t^m: (d t^sigma / dt) p^-1 / (t^sigma - 1).
ESeries sigma_kernel(const FrobeniusSpec& sigma, const PadicContext& ctx, long m);

/// dE1/dt = -3 (F/(t - 1) - F^sigma k(t)), E1(0) = 0.
ESeries solve_E1(const PipelineInputs& in);

/// Right side of the E2 equation; its residue at t = 0 must vanish.
ESeries e2_derivative(const PipelineInputs& in, const ESeries& E1);

/// dE2/dt = -E1 dq/q - 3 F^sigma tau k(t) with the given E2(0).
ESeries solve_E2(const PipelineInputs& in, const ESeries& E1, const Eis& e2_at_zero);

/// (E1/F + 4(1 - t)(F + 3tF') E2, F E2).
std::pair<ESeries, ESeries> epsilons(const ESeries& F, const ESeries& E1, const ESeries& E2);

struct RegulatorOptions {
  long s = 0;                  ///< limit cross-check depth; 0 picks the budgeted default
  long limit_budget = 10'000'000;
  std::optional<long> guard;   ///< working digits beyond N; default family_guard_digits
  SignConvention sign = SignConvention::Corollary;
};

struct RegulatorResult {
  int p = 0;
  mpq_class c;
  long trunc = 0;
  long prec = 0;
  long working_precision = 0;
  ESeries E1, E2, eps1, eps2;
  E2InitialValue e2_zero;
  /// Least valuation of the nu-components of eps1, eps2 below t^M.
  long parity_nu_valuation = kInfinite;
  SignConvention sign = SignConvention::Corollary;
  std::vector<Audit> audits;

  bool all_pass() const;
  /// The packaged pair: (-eps1, -eps2) under Corollary, (eps1, eps2) under Intro.
  std::pair<ESeries, ESeries> regulator() const;
  /// Claimed absolute precision of coefficient e of eps1 / eps2 (min of tracked and N).
  long claimed_precision(const ESeries& s, long e) const;
};

/// Ledger prediction for coefficient n of E2 and eps: N - floor(log_p max(n, 1)).
long ledger_prediction(int p, long prec, long n);

/// Runs the full pipeline. Throws PrecisionExhausted when a coefficient below
/// t^M is known to fewer than N digits.
RegulatorResult regulator_output(int p, const mpq_class& c, long trunc, long prec, const RegulatorOptions& opts = {});

/// c = a^(1 - p) for a unit a with a != 1 mod p.
mpq_class frobenius_constant_for_point(int p, const mpq_class& a);

/// Always throws UnsupportedEvaluation: the series do not converge at |a| = 1.
[[noreturn]] void evaluate_at_unit_point(const RegulatorResult& result, const mpq_class& a);

/// (dh/h, log_sigma(h)) for a unit series h.
std::pair<ESeries, ESeries> symbol_reg_n0(const ESeries& h, const FrobeniusSpec& sigma);

}  // namespace regkit
