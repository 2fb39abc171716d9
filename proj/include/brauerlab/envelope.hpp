#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "brauerlab/certificate.hpp"
#include "json.hpp"

namespace brauerlab {

constexpr int kEnvelopeSchemaVersion = 1;
constexpr const char* kToolVersion = "brauerlab 1.0.0";

enum class CheckStatus { pass, fail, inconclusive };
std::string status_name(CheckStatus s);
CheckStatus parse_status(const std::string& s);

struct EnvelopeCheck {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string details;
};

/// JSON wrapper for every command's output.
struct CertificateEnvelope {
  std::string command;
  nlohmann::json input = nlohmann::json::object();
  std::string version = kToolVersion;
  std::optional<std::uint64_t> seed;
  std::vector<EnvelopeCheck> checks;
  nlohmann::json result = nlohmann::json::object();
  /// Wall-clock seconds; only serialized when recorded, so default output stays byte-stable.
  std::optional<double> timing;

  void add(std::string name, bool passed, std::string details = "");
  void add_inconclusive(std::string name, std::string details = "");
  void append(const Certificate& c, const std::string& prefix = "");
  /// fail if any check failed, else inconclusive if any was, else pass.
  CheckStatus status() const;
};

nlohmann::json to_json(const CertificateEnvelope& e);
CertificateEnvelope envelope_from_json(const nlohmann::json& j);
/// Pretty-printed JSON with a trailing newline.
std::string serialize(const CertificateEnvelope& e);

}  // namespace brauerlab
