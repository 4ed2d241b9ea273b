#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "areawalk_cli/envelope.hpp"

namespace areawalk::cli {

/// Environment variable naming the cache file.
inline constexpr const char* kCacheEnv = "AREAWALK_CACHE";

/// Append-only JSON-lines file of envelopes, keyed by (command, parameters,
/// version). Lines that fail to parse are skipped. The last matching line wins.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path path) : path_(std::move(path)) {}

  /// Cache at $AREAWALK_CACHE, or nothing when the variable is unset or empty.
  static std::optional<ResultCache> from_environment();

  std::optional<ResultEnvelope> lookup(const std::string& command, const json& parameters) const;
  void store(const ResultEnvelope& e) const;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace areawalk::cli
