// Command line front end. Exit codes: 0 success, 1 verification failure,
// 2 input error, 3 budget exceeded.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sl2w::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sl2w::cli
