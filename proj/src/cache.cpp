#include "schubert/cache.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>

namespace schubert {

namespace fs = std::filesystem;

fs::path Cache::resolve_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return *flag;
  if (const char* d = std::getenv("SCHUBERT_CACHE_DIR"); d && *d) return d;
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return fs::path(x) / "schubert";
  if (const char* h = std::getenv("HOME"); h && *h) return fs::path(h) / ".cache" / "schubert";
  return fs::temp_directory_path() / "schubert-cache";
}

fs::path Cache::path_for(const std::string& kind, const CartanType& type, const std::string& key) const {
  std::string name = kind + "-" + type.name();
  if (!key.empty()) {
    name += "-";
    for (char c : key) name += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  }
  return dir_ / (name + ".json");
}

std::optional<Json> Cache::load(const std::string& kind, const CartanType& type, const std::string& key) const {
  std::ifstream in(path_for(kind, type, key));
  if (!in) return std::nullopt;
  Json j = Json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  if (j.value("schema_version", -1) != kCacheSchemaVersion) return std::nullopt;
  if (j.value("cartan_type", "") != type.name() || j.value("kind", "") != kind || j.value("key", "") != key)
    return std::nullopt;
  if (!j.contains("payload")) return std::nullopt;
  return j["payload"];
}

void Cache::store(const std::string& kind, const CartanType& type, const Json& payload, const std::string& key) const {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) return;
  Json j;
  j["schema_version"] = kCacheSchemaVersion;
  j["cartan_type"] = type.name();
  j["kind"] = kind;
  j["key"] = key;
  j["payload"] = payload;
  fs::path target = path_for(kind, type, key);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << j.dump() << '\n';
    if (!out) return;
  }
  fs::rename(tmp, target, ec);
}

std::vector<WeylElement> cached_group(const RootSystem& sys, const Cache* cache, std::size_t cap) {
  std::vector<WeylElement> out;
  if (cache) {
    if (auto p = cache->load("group-enumeration", sys.type())) {
      try {
        for (const auto& word : *p) out.push_back(from_word(sys, word.get<std::vector<int>>()));
      } catch (const std::exception&) {
        out.clear();
      }
      if (!out.empty() && out.size() <= cap) return out;
      out.clear();
    }
  }
  std::vector<WeylElement> all = enumerate_group(sys, cap);
  std::vector<std::pair<std::string, std::size_t>> keyed;
  for (std::size_t k = 0; k < all.size(); ++k) keyed.emplace_back(format_element(all[k]), k);
  std::sort(keyed.begin(), keyed.end(), [&](const auto& a, const auto& b) {
    int la = all[a.second].length(), lb = all[b.second].length();
    if (la != lb) return la < lb;
    return a.first < b.first;
  });
  Json words = Json::array();
  for (const auto& [name, k] : keyed) {
    out.push_back(all[k]);
    words.push_back(reduced_word(all[k]));
  }
  if (cache) cache->store("group-enumeration", sys.type(), words);
  return out;
}

}  // namespace schubert
