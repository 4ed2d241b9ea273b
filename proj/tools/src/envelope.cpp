#include "areawalk_cli/envelope.hpp"

#include <chrono>
#include <ctime>

#include "areawalk/version.hpp"

namespace areawalk::cli {

json to_json(const ResultEnvelope& e) {
  return json{{"command", e.command},
              {"parameters", e.parameters},
              {"timestamp", e.timestamp},
              {"version", e.version},
              {"payload", e.payload}};
}

ResultEnvelope envelope_from_json(const json& j) {
  if (!j.is_object()) throw InvalidArgument("envelope must be a JSON object");
  try {
    ResultEnvelope e;
    e.command = j.at("command").get<std::string>();
    e.parameters = j.at("parameters");
    e.timestamp = j.at("timestamp").get<std::string>();
    e.version = j.at("version").get<std::string>();
    e.payload = j.at("payload");
    return e;
  } catch (const json::exception& ex) {
    throw InvalidArgument(std::string("malformed envelope: ") + ex.what());
  }
}

std::string serialize(const ResultEnvelope& e) { return to_json(e).dump(); }

ResultEnvelope parse_envelope(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InvalidArgument("envelope is not valid JSON");
  return envelope_from_json(j);
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

ResultEnvelope make_envelope(std::string command, json parameters, json payload) {
  return ResultEnvelope{std::move(command), std::move(parameters), utc_timestamp(), kVersion, std::move(payload)};
}

namespace {

int parse_area_key(const std::string& key) {
  std::size_t used = 0;
  int a = 0;
  try {
    a = std::stoi(key, &used);
  } catch (const std::exception&) {
    throw InvalidArgument("bad area key '" + key + "'");
  }
  if (used != key.size()) throw InvalidArgument("bad area key '" + key + "'");
  return a;
}

BigCount parse_count_value(const json& v) {
  if (!v.is_string()) throw InvalidArgument("counts must be decimal strings");
  BigCount c = parse_count(v.get<std::string>());
  if (c < 0) throw InvalidArgument("walk counts cannot be negative");
  return c;
}

json signed_counts(const AreaDistribution& d) {
  json out = json::object();
  for (const auto& [a, c] : d.counts) out[std::to_string(a)] = to_string(c);
  return out;
}

}  // namespace

json distribution_payload(const AreaDistribution& d) {
  json out = json::object();
  for (const auto& [a, c] : d.counts) {
    if (a >= 0) out[std::to_string(a)] = to_string(c);
  }
  return out;
}

AreaDistribution distribution_from_payload(int n, const json& payload) {
  if (!payload.is_object()) throw InvalidArgument("distribution payload must be an object");
  AreaDistribution d{n, {}};
  for (const auto& [key, value] : payload.items()) {
    const int a = parse_area_key(key);
    if (a < 0) throw InvalidArgument("distribution payload holds A >= 0 only");
    const BigCount c = parse_count_value(value);
    d.add(a, c);
    if (a != 0) d.add(-a, c);
  }
  return d;
}

json lambda_payload(int n, const std::vector<AreaDistribution>& table) {
  json rows = json::array();
  for (std::size_t m = 0; m < table.size(); ++m) {
    rows.push_back(json{{"m", m}, {"counts", signed_counts(table[m])}});
  }
  return json{{"n", n}, {"rows", rows}};
}

std::vector<AreaDistribution> lambda_from_payload(const json& payload) {
  try {
    const int n = payload.at("n").get<int>();
    std::vector<AreaDistribution> table;
    for (const auto& row : payload.at("rows")) {
      const auto m = row.at("m").get<std::size_t>();
      if (m != table.size()) throw InvalidArgument("lambda rows out of order");
      AreaDistribution d{n, {}};
      for (const auto& [key, value] : row.at("counts").items()) d.add(parse_area_key(key), parse_count_value(value));
      table.push_back(std::move(d));
    }
    return table;
  } catch (const json::exception& ex) {
    throw InvalidArgument(std::string("malformed lambda payload: ") + ex.what());
  }
}

}  // namespace areawalk::cli
