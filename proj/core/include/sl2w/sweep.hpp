// The verification sweep: every acceptance check, each an exact identity at
// desk scale, with one result per criterion.
#pragma once

#include <sl2w/config.hpp>
#include <sl2w/share_space.hpp>

#include <functional>
#include <string>

namespace sl2w {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// Runs all criteria in order, invoking the callback after each. Returns true
// iff everything passed.
bool run_sweep(ShareSpace& space, const std::function<void(const CriterionResult&)>& report);

}  // namespace sl2w
