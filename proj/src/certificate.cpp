#include "brauerlab/certificate.hpp"

namespace brauerlab {

bool Certificate::ok() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::string Certificate::failure() const {
  for (const auto& c : checks)
    if (!c.passed) return c.detail.empty() ? c.name : c.name + ": " + c.detail;
  return {};
}

void Certificate::add(std::string name, bool passed, std::string detail) {
  checks.push_back({std::move(name), passed, std::move(detail)});
}

void Certificate::append(const Certificate& other, const std::string& prefix) {
  for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.passed, c.detail});
}

}  // namespace brauerlab
