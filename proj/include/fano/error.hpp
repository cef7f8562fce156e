#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fano {

enum class ErrorKind {
  NotFullDimensional,
  OriginNotInterior,
  NonPrimitiveVertex,
  NotCoprime,
  OutOfRange,
  NotAdmissible,
  NotHyperplaneSummable,
  BasketNotResidual,
  ParseError,
  BoundsExceeded,
  ConfigError,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this type; the kind is stable and
// machine-readable (the CLI prints it verbatim).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace fano
