#pragma once

#include <optional>
#include <string>
#include <vector>

namespace fedosov {

struct Check {
  std::string name;
  bool pass = false;
  /// Concrete failing component for failed checks; optional detail otherwise.
  std::optional<std::string> witness;
};

struct VerificationReport {
  std::vector<Check> checks;

  void add(std::string name, bool pass, std::optional<std::string> witness = std::nullopt) {
    checks.push_back({std::move(name), pass, std::move(witness)});
  }
  /// Adds a check that passes iff `witness` is empty.
  void add_zero(std::string name, std::optional<std::string> witness) {
    const bool pass = !witness.has_value();
    checks.push_back({std::move(name), pass, std::move(witness)});
  }
  void append(const VerificationReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }

  bool all_pass() const {
    for (const auto& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }

  const Check* find(const std::string& name) const {
    for (const auto& c : checks) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }
};

}  // namespace fedosov
