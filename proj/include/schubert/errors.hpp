#pragma once

#include <stdexcept>
#include <string>

namespace schubert {

// Bad user-supplied data: ranks, words, permutations, subsets.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An enumeration would exceed the configured element cap.
class ResourceCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two independent computations disagreed. Always a bug in this library.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace schubert
