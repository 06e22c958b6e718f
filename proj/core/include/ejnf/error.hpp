#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ejnf {

enum class ErrorKind {
  ParseError,
  ZeroDenominator,
  DimensionMismatch,
  Singular,
  DependentInput,
  ZeroVector,
  SpectrumNotRepresentable,
  InvalidProvidedEigenvalue,
  IncompleteSpectrum,
  NotAnEigenvalue,
  InvalidStructure,
  InternalInvariantViolation,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library. The message names the operation that
// failed and the offending value.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string_view operation, std::string_view detail)
      : std::runtime_error(std::string(operation) + ": " +
                           std::string(to_string(kind)) + ": " +
                           std::string(detail)),
        kind_(kind),
        operation_(operation) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& operation() const noexcept { return operation_; }

 private:
  ErrorKind kind_;
  std::string operation_;
};

}  // namespace ejnf
