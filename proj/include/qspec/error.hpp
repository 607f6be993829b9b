#pragma once

#include <stdexcept>
#include <string>

namespace qspec {

enum class ErrorKind {
  Domain,
  Dimension,
  NotInImage,
  Singular,
  Eigensolver,
  ResolventSingularity,
  KernelSingularity,
  ContourTouchesSpectrum,
  Contour,
  Geometry,
  NotUnitary,
  Selection,
  NotSliceContinuous,
  CalculusInconsistency,
  Config,
};

const char* to_string(ErrorKind kind) noexcept;

// Every failure raised by the library. `value` carries the diagnostic number
// that goes with the kind (residual, condition estimate, distance, ...), or 0.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, double value = 0.0)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind),
        value_(value) {}

  ErrorKind kind() const noexcept { return kind_; }
  double value() const noexcept { return value_; }

 private:
  ErrorKind kind_;
  double value_;
};

}  // namespace qspec
