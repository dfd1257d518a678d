#pragma once

#include <string>
#include <vector>

namespace zagreb {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CheckReport {
  std::string title;
  std::vector<Check> checks;

  void add(std::string name, bool pass, std::string detail) {
    checks.push_back({std::move(name), pass, std::move(detail)});
  }
  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  void absorb(const CheckReport& other, const std::string& prefix = "") {
    for (const auto& c : other.checks)
      checks.push_back({prefix + c.name, c.pass, c.detail});
  }
};

}  // namespace zagreb
