#include "qdet/cache.hpp"

#include <fstream>
#include <iostream>

namespace qdet {

namespace fs = std::filesystem;

Cache::Cache(fs::path dir) : dir_(std::move(dir)) { fs::create_directories(dir_); }

fs::path Cache::entry_path(const std::string& key) const {
  return dir_ / ("qdet-" + content_hash(key) + ".json");
}

std::optional<Json> Cache::load(const std::string& key) const {
  fs::path p = entry_path(key);
  std::ifstream in(p);
  if (!in) return std::nullopt;
  Json entry;
  try {
    in >> entry;
    if (entry.at("key").get<std::string>() != key) throw Error("key mismatch");
    return entry.at("value");
  } catch (const std::exception& e) {
    std::cerr << "warning: cache entry " << p.string() << " is corrupt (" << e.what()
              << "); recomputing\n";
    return std::nullopt;
  }
}

void Cache::store(const std::string& key, const Json& value) const {
  Json entry{{"key", key}, {"value", value}};
  fs::path p = entry_path(key);
  fs::path tmp = p;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    out << entry.dump();
  }
  fs::rename(tmp, p);
}

size_t Cache::entry_count() const {
  size_t n = 0;
  for (const auto& e : fs::directory_iterator(dir_))
    if (e.is_regular_file() && e.path().extension() == ".json") ++n;
  return n;
}

uintmax_t Cache::total_bytes() const {
  uintmax_t n = 0;
  for (const auto& e : fs::directory_iterator(dir_))
    if (e.is_regular_file() && e.path().extension() == ".json") n += e.file_size();
  return n;
}

size_t Cache::clear() const {
  size_t n = 0;
  for (const auto& e : fs::directory_iterator(dir_)) {
    if (e.is_regular_file() && e.path().extension() == ".json") {
      fs::remove(e.path());
      ++n;
    }
  }
  return n;
}

std::optional<fs::path> Cache::resolve_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return fs::path(flag_value);
  if (const char* env = std::getenv("QDET_CACHE")) {
    if (*env) return fs::path(env);
  }
  return std::nullopt;
}

}  // namespace qdet
