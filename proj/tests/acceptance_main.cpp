// Acceptance suite: runs every verification criterion at its pinned tolerance
// and prints one pass/fail line per criterion. Exit status 0 iff all pass.

#include <cstdio>

#include "concord/verify.hpp"

int main() {
  const auto results = concord::run_verification(concord::VerifyOptions{});
  bool all = true;
  for (const auto& r : results) {
    all = all && r.pass;
    std::printf("%s  criterion %2d  %s  (worst %.3g, %.2fs)%s%s\n", r.pass ? "PASS" : "FAIL",
                r.id, r.name.c_str(), r.worst, r.seconds, r.note.empty() ? "" : " -- ",
                r.note.c_str());
  }
  std::printf("%s\n", all ? "acceptance: all criteria passed" : "acceptance: FAILURES PRESENT");
  return all ? 0 : 1;
}
