// Pass/fail check reports shared by the verification drivers and the CLI.
#pragma once

#include <string>
#include <vector>

namespace torvex {

struct Check {
  std::string name;
  bool ok = false;
  std::string witness;  // short diagnostic for failures / interesting values
};

struct Report {
  std::string title;
  std::vector<Check> checks;

  bool all_ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
  void add(const std::string& name, bool ok, const std::string& witness = "") {
    checks.push_back({name, ok, witness});
  }
  void merge(const Report& o) {
    for (const auto& c : o.checks) checks.push_back(c);
  }
  std::string summary() const;
};

}  // namespace torvex
