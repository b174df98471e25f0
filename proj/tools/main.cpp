#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

using namespace regkit::cli;

int main(int argc, char** argv) {
  CLI::App app{"p-adic regulator toolkit for the x^3 + (3x + 4(1-t))^2 family"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string c_text, a_text, cache_dir, out_path;
  bool json_stdout = false;
  long guard = -1;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--p", cfg.p, "prime p >= 5");
    sub->add_option("--prec", cfg.prec, "p-adic precision N");
    sub->add_option("--trunc", cfg.trunc, "t-adic truncation M");
    sub->add_option("--c", c_text, "Frobenius lift constant, t -> c t^p");
    sub->add_option("--s", cfg.s, "depth of the limit formula");
    sub->add_option("--cache-dir", cache_dir, "result cache directory (or REGKIT_CACHE_DIR)");
    sub->add_flag("--json", json_stdout, "print the JSON document on stdout");
    sub->add_option("--out", out_path, "write the JSON document to a file");
  };

  auto* reg = app.add_subcommand("regulator", "solve for E1, E2 and the regulator");
  add_common(reg);
  reg->add_option("--a", a_text, "unit point t = a; sets c = a^(1-p)");
  reg->add_option("--guard", guard, "guard digits (default chosen from p and M)");
  reg->add_option("--sign", cfg.sign, "corollary or intro");

  auto* poly = app.add_subcommand("polylog", "evaluate ln_r(z)");
  add_common(poly);
  poly->add_option("--r", cfg.r, "weight r >= 0");
  poly->add_option("--z", cfg.z, "nu, -nu, nu^2, -nu^2, A,B for A + B nu, or a rational");

  auto* fam = app.add_subcommand("family", "Gauss-Manin and Frobenius data of the family");
  add_common(fam);
  fam->add_flag("--corrupt", cfg.corrupt, "perturb Frobenius to exercise the audits");

  auto* check = app.add_subcommand("check", "run every audit suite");
  add_common(check);
  check->add_flag("--corrupt", cfg.corrupt, "perturb Frobenius to exercise the audits");
  check->add_flag("--family-only", cfg.family_only, "only the family audits");

  auto* demo = app.add_subcommand("filfmic-demo", "residuals of the standard objects");
  add_common(demo);
  demo->add_flag("--corrupt", cfg.corrupt, "perturb Frobenius to exercise the audits");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kBadConfig;
  }

  for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();
  try {
    if (!c_text.empty()) {
      cfg.c = parse_rational(c_text);
      cfg.c_given = true;
    }
    if (!a_text.empty()) cfg.a = parse_rational(a_text);
  } catch (const regkit::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadConfig;
  }
  if (guard >= 0) cfg.guard = guard;
  if (!cache_dir.empty())
    cfg.cache_dir = cache_dir;
  else if (const char* env = std::getenv("REGKIT_CACHE_DIR"); env && *env)
    cfg.cache_dir = env;

  CommandOutcome outcome;
  try {
    outcome = run(cfg);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  const std::string text = render(outcome.document);
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return kBadConfig;
    }
    out << text;
  }
  if (json_stdout) {
    std::cout << text;
  } else {
    const auto& doc = outcome.document;
    std::cout << cfg.command << ": " << doc["status"].get<std::string>()
              << (outcome.from_cache ? " (cached)" : "") << "\n";
    for (const auto& a : doc["audits"])
      std::cout << (a["pass"].get<bool>() ? "  PASS " : "  FAIL ") << a["name"].get<std::string>()
                << (a["pass"].get<bool>() || a["detail"].get<std::string>().empty()
                        ? ""
                        : ": " + a["detail"].get<std::string>())
                << "\n";
    if (doc["data"].contains("error")) std::cerr << "error: " << doc["data"]["error"].get<std::string>() << "\n";
    if (doc["data"].contains("refusal")) std::cerr << "refused: " << doc["data"]["refusal"].get<std::string>() << "\n";
    if (doc["data"].contains("evaluation"))
      std::cerr << "refused: " << doc["data"]["evaluation"]["refusal"].get<std::string>() << "\n";
  }
  return outcome.exit_code;
}
