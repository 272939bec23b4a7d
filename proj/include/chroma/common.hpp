#pragma once

#include <stdexcept>
#include <string>

namespace chroma {

// Error categories; the CLI maps them onto exit codes (1 usage, 2 data, 3 numeric).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace chroma
