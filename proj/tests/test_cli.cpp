#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "cache.hpp"
#include "commands.hpp"
#include "doctest.h"

using namespace regkit;
using namespace regkit::cli;

namespace {

RunConfig config(const std::string& command) {
  RunConfig cfg;
  cfg.command = command;
  cfg.p = 5;
  cfg.prec = 6;
  cfg.trunc = 20;
  cfg.s = 6;
  return cfg;
}

std::filesystem::path scratch_dir(const std::string& tag) {
  auto dir = std::filesystem::temp_directory_path() / ("regkit-test-" + tag + "-" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("-1/64") == mpq_class(-1, 64));
  CHECK(parse_rational("6/4") == mpq_class(3, 2));
  CHECK_THROWS_AS(parse_rational("x"), ConfigError);
  CHECK_THROWS_AS(parse_rational("1/0"), ConfigError);
  CHECK_THROWS_AS(parse_rational(""), ConfigError);
}

TEST_CASE("exit codes") {
  CHECK(run(config("regulator")).exit_code == kPass);
  CHECK(run(config("family")).exit_code == kPass);

  RunConfig bad = config("regulator");
  bad.p = 9;
  CHECK(run(bad).exit_code == kBadConfig);
  bad = config("family");
  bad.c = 2;
  CHECK(run(bad).exit_code == kBadConfig);
  bad = config("nonsense");
  CHECK(run(bad).exit_code == kBadConfig);

  RunConfig point = config("regulator");
  point.a = mpq_class(2);
  const CommandOutcome refused = run(point);
  CHECK(refused.exit_code == kUnsupported);
  CHECK(refused.document["data"]["evaluation"]["c"] == "1/16");

  RunConfig clash = point;
  clash.c = 6;
  clash.c_given = true;
  CHECK(run(clash).exit_code == kBadConfig);

  RunConfig exhausted = config("regulator");
  exhausted.guard = 0;
  exhausted.trunc = 40;
  const CommandOutcome ex = run(exhausted);
  CHECK(ex.exit_code == kPrecisionExhausted);
  CHECK(ex.document["status"] == "precision-exhausted");

  RunConfig disk = config("polylog");
  disk.z = "1";
  CHECK(run(disk).exit_code == kUnsupported);
}

TEST_CASE("corruption is reported as an audit failure naming the entry") {
  RunConfig cfg = config("check");
  cfg.family_only = true;
  cfg.corrupt = true;
  const CommandOutcome out = run(cfg);
  CHECK(out.exit_code == kAuditFailure);
  bool named = false;
  for (const auto& a : out.document["audits"])
    if (!a["pass"].get<bool>() && a["detail"].get<std::string>().find("entry (") != std::string::npos) named = true;
  CHECK(named);
}

TEST_CASE("polylog command") {
  RunConfig cfg = config("polylog");
  for (const char* z : {"nu", "-nu", "nu^2", "-nu^2", "3,1", "2"}) {
    cfg.z = z;
    for (long r : {0L, 1L, 2L, 3L}) {
      cfg.r = r;
      CAPTURE(z);
      CAPTURE(r);
      CHECK(run(cfg).exit_code == kPass);
    }
  }
}

TEST_CASE("output is deterministic and the cache returns identical bytes") {
  const RunConfig cfg = config("regulator");
  const std::string first = render(run(cfg).document);
  CHECK(first == render(run(cfg).document));

  RunConfig cached = cfg;
  cached.cache_dir = scratch_dir("cache");
  const CommandOutcome miss = run(cached);
  CHECK_FALSE(miss.from_cache);
  const CommandOutcome hit = run(cached);
  CHECK(hit.from_cache);
  CHECK(render(hit.document) == first);

  // A different configuration must not hit the same entry.
  RunConfig other = cached;
  other.prec = 7;
  CHECK_FALSE(run(other).from_cache);
  std::filesystem::remove_all(*cached.cache_dir);
}

TEST_CASE("cache rejects an entry whose key does not match") {
  const auto dir = scratch_dir("mismatch");
  const ResultCache cache(dir);
  Json key;
  key["p"] = 5;
  cache.store(key, "{}\n");
  REQUIRE(cache.lookup(key).has_value());
  {
    std::ofstream out(cache.path_for(key), std::ios::trunc);
    out << "{\"schema\":\"other\",\"key\":{\"p\":5}}\n{}\n";
  }
  CHECK_FALSE(cache.lookup(key).has_value());
  std::filesystem::remove_all(dir);
}

TEST_CASE("cached and fresh documents agree on random configurations") {
  std::mt19937 rng(515);
  const auto dir = scratch_dir("spot");
  for (int k = 0; k < 4; ++k) {
    RunConfig cfg = config(k % 2 == 0 ? "family" : "regulator");
    cfg.p = k < 2 ? 5 : 7;
    cfg.prec = 4 + static_cast<long>(rng() % 4);
    cfg.trunc = 10 + static_cast<long>(rng() % 11);
    cfg.c = 1 + cfg.p * static_cast<long>(rng() % 3);
    const std::string fresh = render(run(cfg).document);
    cfg.cache_dir = dir;
    run(cfg);
    const CommandOutcome hit = run(cfg);
    CAPTURE(cfg.p);
    CAPTURE(cfg.prec);
    CAPTURE(cfg.trunc);
    CHECK(hit.from_cache);
    CHECK(render(hit.document) == fresh);
  }
  std::filesystem::remove_all(dir);
}
