#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cauchy {

enum class ErrorKind {
  DegreeTooLow,
  DivisionBySingularSeries,
  LogOfVanishingSeries,
  NotConformal,
  NotInjective,
  BoundaryNotAnalytic,
  InversionDiverged,
  SizeError,
  NearBoundary,
  KernelSingular,
  RadiiError,
  ConfigError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cauchy
