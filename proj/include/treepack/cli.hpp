#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace treepack {

// Whole command-line surface as a function, so tests can drive it
// in-process. Exit status: 0 success, 1 bad input, 2 failed checks.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace treepack
