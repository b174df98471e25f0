#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "json_io.hpp"

namespace regkit::cli {

enum ExitCode : int {
  kPass = 0,
  kBadConfig = 2,
  kUnsupported = 3,
  kPrecisionExhausted = 4,
  kAuditFailure = 5,
};

struct RunConfig {
  std::string command;
  int p = 7;
  long prec = 8;    ///< N
  long trunc = 40;  ///< M
  mpq_class c = 1;
  bool c_given = false;
  std::optional<mpq_class> a;
  long s = 0;  ///< 0 picks the budgeted default
  std::optional<long> guard;
  std::string sign = "corollary";
  std::optional<std::filesystem::path> cache_dir;
  long r = 2;
  std::string z = "-nu";
  bool corrupt = false;
  bool family_only = false;
};

struct CommandOutcome {
  int exit_code = kPass;
  Json document;
  bool from_cache = false;
};

/// "3", "-1/64"; throws ConfigError.
mpq_class parse_rational(const std::string& text);

/// Throws ConfigError unless p >= 5 is prime, M >= 4, N >= 2 and c is a unit = 1 mod p.
void validate(const RunConfig& cfg);

/// The limit depth used when --s is absent.
long default_depth(const RunConfig& cfg);

CommandOutcome run_regulator(const RunConfig& cfg);
CommandOutcome run_polylog(const RunConfig& cfg);
CommandOutcome run_family(const RunConfig& cfg);
CommandOutcome run_check(const RunConfig& cfg);
CommandOutcome run_filfmic_demo(const RunConfig& cfg);

/// Dispatches on cfg.command and turns library errors into exit codes.
CommandOutcome run(const RunConfig& cfg);

/// Deterministic text of a document.
std::string render(const Json& document);

}  // namespace regkit::cli
