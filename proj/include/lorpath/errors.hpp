#pragma once

#include <stdexcept>

namespace lorpath {

// Error taxonomy; categories line up with the C API status codes and the
// CLI exit codes (see include/lorpath.h).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ArgumentError : Error { using Error::Error; };  // bad parameters
struct ParseError : Error { using Error::Error; };     // malformed JSON / number syntax
struct GraphError : Error { using Error::Error; };     // structural graph violations
struct WeightError : Error { using Error::Error; };    // ordered-weight validation
struct LimitError : Error { using Error::Error; };     // enumeration cap exceeded

}  // namespace lorpath
