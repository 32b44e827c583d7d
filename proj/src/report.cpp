#include "torvex/report.hpp"

namespace torvex {

std::string Report::summary() const {
  size_t pass = 0;
  for (const auto& c : checks) pass += c.ok;
  std::string s = title + ": " + std::to_string(pass) + "/" + std::to_string(checks.size()) + " checks pass";
  for (const auto& c : checks)
    if (!c.ok) s += "\n  FAIL " + c.name + (c.witness.empty() ? "" : ": " + c.witness);
  return s;
}

}  // namespace torvex
