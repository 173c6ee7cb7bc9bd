#ifndef CORINGS_REPORT_HPP
#define CORINGS_REPORT_HPP

#include <string>
#include <vector>

namespace corings {

enum class CheckStatus { Pass, Fail, Undecided, NotApplicable };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;  // witness description on failure, notes otherwise

  static CheckResult pass(std::string name, std::string detail = "") {
    return {std::move(name), CheckStatus::Pass, std::move(detail)};
  }
  static CheckResult fail(std::string name, std::string detail) {
    return {std::move(name), CheckStatus::Fail, std::move(detail)};
  }
};

struct Report {
  std::vector<CheckResult> checks;

  void add(CheckResult r) { checks.push_back(std::move(r)); }
  void require(bool ok, const std::string& name, const std::string& witness_on_fail = "") {
    checks.push_back(ok ? CheckResult::pass(name) : CheckResult::fail(name, witness_on_fail));
  }
  bool ok() const {
    for (const auto& c : checks)
      if (c.status != CheckStatus::Pass) return false;
    return true;
  }
  void merge(const Report& other, const std::string& prefix) {
    for (auto c : other.checks) {
      c.name = prefix + "/" + c.name;
      checks.push_back(std::move(c));
    }
  }
};

std::string to_string(CheckStatus s);

}  // namespace corings

#endif
