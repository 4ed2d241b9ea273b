#include "areawalk_cli/cache.hpp"

#include <cstdlib>
#include <fstream>

#include "areawalk/version.hpp"

namespace areawalk::cli {

std::optional<ResultCache> ResultCache::from_environment() {
  const char* env = std::getenv(kCacheEnv);
  if (env == nullptr || *env == '\0') return std::nullopt;
  return ResultCache(env);
}

std::optional<ResultEnvelope> ResultCache::lookup(const std::string& command, const json& parameters) const {
  std::ifstream in(path_);
  if (!in) return std::nullopt;
  std::optional<ResultEnvelope> hit;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      ResultEnvelope e = parse_envelope(line);
      if (e.command == command && e.parameters == parameters && e.version == kVersion) hit = std::move(e);
    } catch (const InvalidArgument&) {
      // a torn or foreign line; ignore it
    }
  }
  return hit;
}

void ResultCache::store(const ResultEnvelope& e) const {
  std::ofstream out(path_, std::ios::app);
  if (!out) throw InvalidArgument("cannot open cache file " + path_.string());
  out << serialize(e) << '\n';
}

}  // namespace areawalk::cli
