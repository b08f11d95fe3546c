#pragma once

#include <stdexcept>
#include <string>

namespace treepack {

// Problems with user-supplied data: malformed files, bad parameters,
// point sets that are not in general position. The CLI reports these
// with exit status 1.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A guarantee of the construction failed to hold, or an internal
// invariant broke. Either way it is a bug, not a user mistake. The CLI
// reports these with exit status 2.
class CheckError : public std::logic_error {
 public:
  explicit CheckError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace treepack
