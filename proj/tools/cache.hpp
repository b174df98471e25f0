#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "json_io.hpp"

namespace regkit::cli {

inline constexpr const char* kSchema = "regkit-output/1";

std::uint64_t fnv1a64(const std::string& bytes);

/// On-disk store of finished JSON documents, addressed by the hash of the
/// configuration that produced them.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  /// Cached document for key, if present with a matching schema and key.
  std::optional<std::string> lookup(const Json& key) const;
  /// Writes through a temporary file and an atomic rename.
  void store(const Json& key, const std::string& document) const;

  std::filesystem::path path_for(const Json& key) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace regkit::cli
