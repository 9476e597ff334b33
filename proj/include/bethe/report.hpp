#pragma once

#include <string>
#include <vector>

namespace bethe {

struct Check {
  std::string name;
  bool pass = false;
  std::string residual;  // "0" for exact identities, otherwise a decimal bound
  std::string detail;
};

// Outcome of a family of finite checks.
struct Report {
  std::vector<Check> checks;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  void add(std::string name, bool pass, std::string residual = "0", std::string detail = {}) {
    checks.push_back(Check{std::move(name), pass, std::move(residual), std::move(detail)});
  }
  void append(const Report& o, const std::string& prefix = {}) {
    for (const auto& c : o.checks) checks.push_back(Check{prefix + c.name, c.pass, c.residual, c.detail});
  }
  std::string first_failure() const {
    for (const auto& c : checks)
      if (!c.pass) return c.name + (c.detail.empty() ? "" : ": " + c.detail);
    return {};
  }
};

}  // namespace bethe
