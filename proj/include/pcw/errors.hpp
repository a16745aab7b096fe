#pragma once

#include <stdexcept>
#include <string>

namespace pcw {

// Malformed or inconsistent input (presentation files, words, subgroup data).
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured enumeration or search bound would be exceeded.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two independent computations disagreed. Always an implementation bug.
class CrossCheckFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pcw
