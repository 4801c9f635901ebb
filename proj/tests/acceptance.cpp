// Runs every registered verification check and prints one PASS/FAIL line per
// acceptance criterion, followed by the check details.

#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "locgame/verify.hpp"

int main() {
  using Clock = std::chrono::steady_clock;
  struct Outcome {
    bool pass = true;
    double seconds = 0;
    std::vector<std::string> lines;
  };
  std::map<int, Outcome> by_criterion;
  for (const auto& check : locgame::verification_checks()) {
    const auto start = Clock::now();
    const auto r = check.run();
    auto& o = by_criterion[check.criterion];
    o.seconds += std::chrono::duration<double>(Clock::now() - start).count();
    o.pass = o.pass && r.pass();
    o.lines.push_back((r.pass() ? "ok   " : "FAIL ") + check.id + ": " + check.summary);
    for (const auto& d : r.details) o.lines.push_back("       " + d);
    for (const auto& f : r.failures) o.lines.push_back("       failure: " + f);
    for (const auto& f : r.soft_failures) o.lines.push_back("       reported: " + f);
  }
  bool all = true;
  for (const auto& [criterion, o] : by_criterion) {
    std::printf("%s criterion %d (%.2fs)\n", o.pass ? "PASS" : "FAIL", criterion, o.seconds);
    for (const auto& line : o.lines) std::printf("  %s\n", line.c_str());
    all = all && o.pass;
  }
  std::printf("%s\n", all ? "all criteria pass" : "some criteria fail");
  return all ? 0 : 1;
}
