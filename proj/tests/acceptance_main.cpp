// Acceptance runner: one line per check, PASS or FAIL plus the measured
// numbers. --criterion K runs a single check; no arguments runs all eleven.
// Exit 0 when every executed check passes, 2 otherwise, 1 on usage errors.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <vector>

#include "cesaro/verify.hpp"

int main(int argc, char** argv) {
  int criterion = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      criterion = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--criterion K]\n", argv[0]);
      return 1;
    }
  }

  std::vector<cesaro::verify::CheckResult> results;
  try {
    if (criterion > 0)
      results.push_back(cesaro::verify::run_one(criterion));
    else
      results = cesaro::verify::run_all();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }

  bool all_pass = true;
  for (const auto& c : results) {
    all_pass = all_pass && c.pass;
    std::printf("%s %2d %s: %s\n", c.pass ? "PASS" : "FAIL", c.id,
                c.name.c_str(), c.detail.c_str());
  }
  return all_pass ? 0 : 2;
}
