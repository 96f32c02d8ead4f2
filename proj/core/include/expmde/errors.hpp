#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace expmde {

/// Bad arguments: non-square operands, non-positive mesh sizes, tolerances
/// out of range and the like.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Non-positive or non-finite truncation tolerance.
class InvalidTolerance : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Base class for failures of the numerical kernels.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A pivot fell below n·u·‖M‖∞. When raised from the quadrature, `node()`
/// holds the index k of the offending abscissa.
class SingularMatrix : public NumericalError {
 public:
  explicit SingularMatrix(const std::string& what, std::optional<long> node = std::nullopt)
      : NumericalError(what), node_(node) {}
  std::optional<long> node() const noexcept { return node_; }

 private:
  std::optional<long> node_;
};

class NoConvergence : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// The truncation scan ran past its cap; the tolerance is unattainable for
/// this mesh size.
class IntervalOverflow : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// ρ could not be estimated (ε₂ = 0 or ε₁ ≤ ε₂).
class DegenerateEstimate : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// The refined mesh size fell below the configured floor.
class MeshFloor : public NumericalError {
 public:
  explicit MeshFloor(const std::string& what, double h) : NumericalError(what), h_(h) {}
  double mesh() const noexcept { return h_; }

 private:
  double h_;
};

}  // namespace expmde
