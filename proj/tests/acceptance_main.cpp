// Acceptance gate: runs every criterion and prints one pass/fail line each.
// Exit status is nonzero if any criterion fails.

#include "qevp/acceptance.hpp"

#include <cstdio>

int main() {
  bool all_pass = true;
  for (int id = 1; id <= 16; ++id) {
    qevp::accept::CriterionResult r = qevp::accept::run_one(id);
    std::printf("[%s] criterion %2d %-22s %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.detail.c_str());
    std::fflush(stdout);
    all_pass = all_pass && r.pass;
  }
  return all_pass ? 0 : 1;
}
