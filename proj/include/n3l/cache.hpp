#pragma once

/**
 * @file cache.hpp
 * @brief On-disk cache of solved boards: one JSON document, rewritten
 * atomically on every put.
 */

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "n3l/error.hpp"
#include "n3l/geometry.hpp"

namespace n3l {

inline constexpr int kCacheVersion = 1;

struct CacheEntry {
  int T = 0;
  std::optional<std::uint64_t> count_max;
  std::optional<std::vector<std::uint64_t>> counts;
  int version = kCacheVersion;
  std::int64_t timestamp = 0;  // seconds since the epoch

  friend bool operator==(const CacheEntry&, const CacheEntry&) = default;
};

/// "kind:m:n" with m <= n.
inline std::string cache_key(Kind kind, int m, int n) {
  return to_string(kind) + ":" + std::to_string(std::min(m, n)) + ":" + std::to_string(std::max(m, n));
}

inline nlohmann::json to_json(const CacheEntry& e) {
  nlohmann::json j{{"T", e.T}, {"version", e.version}, {"timestamp", e.timestamp}};
  j["count_max"] = e.count_max ? nlohmann::json(*e.count_max) : nlohmann::json(nullptr);
  if (e.counts) j["counts"] = *e.counts;
  return j;
}

inline CacheEntry cache_entry_from_json(const nlohmann::json& j) {
  CacheEntry e;
  e.T = j.at("T").get<int>();
  e.version = j.at("version").get<int>();
  e.timestamp = j.at("timestamp").get<std::int64_t>();
  if (j.contains("count_max") && !j["count_max"].is_null()) e.count_max = j["count_max"].get<std::uint64_t>();
  if (j.contains("counts")) e.counts = j["counts"].get<std::vector<std::uint64_t>>();
  return e;
}

class ResultCache {
 public:
  using Warn = std::function<void(const std::string&)>;

  explicit ResultCache(std::filesystem::path path, Warn warn = {})
      : path_(std::move(path)), warn_(std::move(warn)) {}

  [[nodiscard]] const std::filesystem::path& path() const { return path_; }

  /// Entry for key; absent when missing or written by another cache version.
  [[nodiscard]] std::optional<CacheEntry> get(const std::string& key) const {
    auto doc = load();
    if (!doc.contains(key)) return std::nullopt;
    try {
      auto e = cache_entry_from_json(doc[key]);
      if (e.version != kCacheVersion) return std::nullopt;
      return e;
    } catch (const nlohmann::json::exception&) {
      warning("ignoring malformed cache entry '" + key + "'");
      return std::nullopt;
    }
  }

  /// Read-modify-write of the whole document through a temporary file.
  void put(const std::string& key, CacheEntry entry) {
    if (entry.timestamp == 0)
      entry.timestamp = std::chrono::duration_cast<std::chrono::seconds>(
                            std::chrono::system_clock::now().time_since_epoch())
                            .count();
    auto doc = load();
    doc[key] = to_json(entry);
    nlohmann::json root{{"version", kCacheVersion}, {"entries", doc}};

    auto tmp = path_;
    tmp += ".tmp";
    {
      std::ofstream os(tmp, std::ios::trunc);
      if (!os) throw Error("cannot write cache file " + tmp.string());
      os << root.dump(1) << "\n";
      if (!os.flush()) throw Error("failed writing cache file " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path_, ec);
    if (ec) throw Error("cannot replace cache file " + path_.string() + ": " + ec.message());
  }

 private:
  /// Entries object of the cache document; empty when the file is missing.
  /// A corrupted or foreign-version file is ignored with a warning.
  [[nodiscard]] nlohmann::json load() const {
    std::error_code ec;
    if (!std::filesystem::exists(path_, ec)) return nlohmann::json::object();
    std::ifstream is(path_);
    if (!is) throw Error("cannot read cache file " + path_.string());
    std::stringstream ss;
    ss << is.rdbuf();
    auto root = nlohmann::json::parse(ss.str(), nullptr, false);
    if (root.is_discarded() || !root.is_object() || !root.contains("entries") || !root["entries"].is_object()) {
      warning("cache file " + path_.string() + " is corrupted; ignoring it");
      return nlohmann::json::object();
    }
    if (root.value("version", -1) != kCacheVersion) {
      warning("cache file " + path_.string() + " has a different version; ignoring it");
      return nlohmann::json::object();
    }
    return root["entries"];
  }

  void warning(const std::string& msg) const {
    if (warn_) warn_(msg);
  }

  std::filesystem::path path_;
  Warn warn_;
};

}  // namespace n3l
