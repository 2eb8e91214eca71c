#pragma once

#include <stdexcept>
#include <string>

namespace gtsprd {

// Query or removal on an empty container.
class EmptyError : public std::out_of_range {
 public:
  explicit EmptyError(const std::string& what) : std::out_of_range(what) {}
};

// Heap handle used after its entry was removed.
class DeadHandleError : public std::invalid_argument {
 public:
  explicit DeadHandleError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace gtsprd
