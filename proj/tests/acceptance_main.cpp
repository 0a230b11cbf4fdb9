// Acceptance suite: runs every verification criterion and prints one
// pass/fail line per criterion. Exit status 0 iff all pass.
#include <sl2w/sweep.hpp>

#include <cstdio>

int main() {
  sl2w::RewriteEngine engine;
  sl2w::ShareSpace space(engine);
  bool all = sl2w::run_sweep(space, [](const sl2w::CriterionResult& r) {
    std::printf("[%s] %02d %-32s (%6.1fs)  %s\n", r.pass ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.seconds, r.detail.c_str());
    std::fflush(stdout);
  });
  std::printf("%s\n", all ? "acceptance: all criteria passed" : "acceptance: FAILURES");
  return all ? 0 : 1;
}
