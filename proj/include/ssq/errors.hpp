#pragma once

#include <stdexcept>
#include <string>

namespace ssq {

// Error taxonomy shared by the library and the CLI. The CLI maps these to
// exit codes: invalid_input -> 1, resource_limit -> 2, internal_consistency -> 3.

class invalid_input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class resource_limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class internal_consistency_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ssq
