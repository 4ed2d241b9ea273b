#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "areawalk/area_enum.hpp"

namespace areawalk::cli {

using nlohmann::json;

/// One result as written to stdout (--format json) or to the cache.
/// Counts travel as decimal strings so no digit is lost.
struct ResultEnvelope {
  std::string command;
  json parameters = json::object();
  std::string timestamp;
  std::string version;
  json payload;

  friend bool operator==(const ResultEnvelope&, const ResultEnvelope&) = default;
};

json to_json(const ResultEnvelope& e);
ResultEnvelope envelope_from_json(const json& j);

std::string serialize(const ResultEnvelope& e);
/// Throws InvalidArgument on malformed input.
ResultEnvelope parse_envelope(const std::string& text);

/// ISO-8601 UTC, second resolution.
std::string utc_timestamp();

ResultEnvelope make_envelope(std::string command, json parameters, json payload);

/// {"0": "28", "1": "4"}: the non-negative half of a symmetric distribution.
json distribution_payload(const AreaDistribution& d);
/// Rebuilds both signs. Throws InvalidArgument on bad keys or counts.
AreaDistribution distribution_from_payload(int n, const json& payload);

/// {"n": n, "rows": [{"m": 0, "counts": {"-1": "..", ...}}, ...]}
json lambda_payload(int n, const std::vector<AreaDistribution>& table);
std::vector<AreaDistribution> lambda_from_payload(const json& payload);

}  // namespace areawalk::cli
