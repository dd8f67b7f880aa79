#pragma once

#include <stdexcept>
#include <string>

namespace lrc {

/// Raised when input data cannot be analyzed or generated from: empty or
/// degenerate series, too-short sequences, malformed files. Parameter
/// misuse is reported with std::invalid_argument instead.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lrc
