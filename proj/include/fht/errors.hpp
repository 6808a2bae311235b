#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fht {

/// Grid or matrix size outside the supported range.
struct InvalidSizeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Argument outside [-1, 1] (or another closed domain).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Operands live on incompatible grids, or a grid does not support the
/// requested operation.
struct GridMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Invalid weight parameter or option value.
struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Malformed input file; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Unreadable or unwritable file.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Should not happen; indicates a broken numerical invariant.
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace fht
