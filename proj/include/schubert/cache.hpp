#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "schubert/io.hpp"

namespace schubert {

inline constexpr int kCacheSchemaVersion = 1;

// JSON files keyed by payload kind, Cartan type and an optional key.
// Unreadable entries and entries with another schema version count as
// misses. Write failures are ignored.
class Cache {
 public:
  // Directory precedence: explicit flag, SCHUBERT_CACHE_DIR,
  // $XDG_CACHE_HOME/schubert, ~/.cache/schubert.
  static std::filesystem::path resolve_dir(const std::optional<std::string>& flag);

  explicit Cache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  const std::filesystem::path& dir() const { return dir_; }
  std::optional<Json> load(const std::string& kind, const CartanType& type, const std::string& key = "") const;
  void store(const std::string& kind, const CartanType& type, const Json& payload, const std::string& key = "") const;
  std::filesystem::path path_for(const std::string& kind, const CartanType& type, const std::string& key) const;

 private:
  std::filesystem::path dir_;
};

// Whole group sorted by (length, formatted element), through the cache when given.
std::vector<WeylElement> cached_group(const RootSystem& sys, const Cache* cache, std::size_t cap);

}  // namespace schubert
