#pragma once

#include <filesystem>
#include <optional>

#include "qdet/serialize.hpp"

namespace qdet {

// On-disk result cache: one JSON file per entry under the cache directory,
// named by the content hash of the canonical key.  A stored entry whose key
// does not match its filename hash is treated as corrupt: the value is
// recomputed and the file rewritten (with a warning on stderr).
class Cache {
 public:
  explicit Cache(std::filesystem::path dir);

  std::optional<Json> load(const std::string& key) const;
  void store(const std::string& key, const Json& value) const;

  size_t entry_count() const;
  uintmax_t total_bytes() const;
  size_t clear() const;
  const std::filesystem::path& dir() const { return dir_; }

  // Resolution order: explicit flag, QDET_CACHE, none.
  static std::optional<std::filesystem::path> resolve_dir(const std::string& flag_value);

 private:
  std::filesystem::path entry_path(const std::string& key) const;
  std::filesystem::path dir_;
};

}  // namespace qdet
