#include "cache.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace regkit::cli {

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

namespace {

std::string key_text(const Json& key) {
  Json wrapped;
  wrapped["schema"] = kSchema;
  wrapped["key"] = key;
  return wrapped.dump();
}

}  // namespace

std::filesystem::path ResultCache::path_for(const Json& key) const {
  char name[32];
  std::snprintf(name, sizeof name, "%016llx.json", static_cast<unsigned long long>(fnv1a64(key_text(key))));
  return dir_ / name;
}

std::optional<std::string> ResultCache::lookup(const Json& key) const {
  std::ifstream in(path_for(key), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  // Header line holds the full key so that hash collisions are detected.
  const std::string text = buf.str();
  const auto newline = text.find('\n');
  if (newline == std::string::npos || text.substr(0, newline) != key_text(key)) return std::nullopt;
  return text.substr(newline + 1);
}

void ResultCache::store(const Json& key, const std::string& document) const {
  std::filesystem::create_directories(dir_);
  const auto target = path_for(key);
  auto tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cache: cannot write " + tmp.string());
    out << key_text(key) << '\n' << document;
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace regkit::cli
