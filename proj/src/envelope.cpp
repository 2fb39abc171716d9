#include "brauerlab/envelope.hpp"

#include <stdexcept>

namespace brauerlab {

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::inconclusive: return "inconclusive";
  }
  return "";
}

CheckStatus parse_status(const std::string& s) {
  if (s == "pass") return CheckStatus::pass;
  if (s == "fail") return CheckStatus::fail;
  if (s == "inconclusive") return CheckStatus::inconclusive;
  throw std::invalid_argument("unknown check status: " + s);
}

void CertificateEnvelope::add(std::string name, bool passed, std::string details) {
  checks.push_back({std::move(name), passed ? CheckStatus::pass : CheckStatus::fail, std::move(details)});
}

void CertificateEnvelope::add_inconclusive(std::string name, std::string details) {
  checks.push_back({std::move(name), CheckStatus::inconclusive, std::move(details)});
}

void CertificateEnvelope::append(const Certificate& c, const std::string& prefix) {
  for (const auto& r : c.checks) add(prefix + r.name, r.passed, r.detail);
}

CheckStatus CertificateEnvelope::status() const {
  CheckStatus s = CheckStatus::pass;
  for (const auto& c : checks) {
    if (c.status == CheckStatus::fail) return CheckStatus::fail;
    if (c.status == CheckStatus::inconclusive) s = CheckStatus::inconclusive;
  }
  return s;
}

nlohmann::json to_json(const CertificateEnvelope& e) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : e.checks)
    checks.push_back({{"name", c.name}, {"status", status_name(c.status)}, {"details", c.details}});
  nlohmann::json j{{"schema_version", kEnvelopeSchemaVersion},
                   {"command", e.command},
                   {"input", e.input},
                   {"version", e.version},
                   {"seed", e.seed ? nlohmann::json(*e.seed) : nlohmann::json(nullptr)},
                   {"status", status_name(e.status())},
                   {"checks", checks},
                   {"result", e.result}};
  if (e.timing) j["timing"] = {{"seconds", *e.timing}};
  return j;
}

CertificateEnvelope envelope_from_json(const nlohmann::json& j) {
  if (j.at("schema_version").get<int>() != kEnvelopeSchemaVersion) throw std::invalid_argument("unsupported schema version");
  CertificateEnvelope e;
  e.command = j.at("command").get<std::string>();
  e.input = j.at("input");
  e.version = j.at("version").get<std::string>();
  if (!j.at("seed").is_null()) e.seed = j.at("seed").get<std::uint64_t>();
  for (const auto& c : j.at("checks"))
    e.checks.push_back({c.at("name").get<std::string>(), parse_status(c.at("status").get<std::string>()),
                        c.at("details").get<std::string>()});
  e.result = j.at("result");
  if (j.contains("timing")) e.timing = j.at("timing").at("seconds").get<double>();
  if (status_name(e.status()) != j.at("status").get<std::string>()) throw std::invalid_argument("status disagrees with checks");
  return e;
}

std::string serialize(const CertificateEnvelope& e) { return to_json(e).dump(2) + "\n"; }

}  // namespace brauerlab
