#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace locgame {

struct CheckResult {
  std::vector<std::string> details;
  std::vector<std::string> failures;       // hard: the check fails
  std::vector<std::string> soft_failures;  // reported only
  bool pass() const { return failures.empty(); }
};

struct Check {
  std::string id;
  int criterion = 0;
  std::string summary;
  std::function<CheckResult()> run;
};

/// Registered checks in criterion order.
const std::vector<Check>& verification_checks();

/// nullptr when no check has this id.
const Check* find_check(std::string_view id);

}  // namespace locgame
