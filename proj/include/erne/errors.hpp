#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace erne {

enum class ErrorKind {
  AntisymmetryViolation,
  NotTransitivelyClosed,
  ForeignElement,
  OverlappingCarriers,
  CarrierMismatch,
  LimitExceeded,
  NotMonotone,
  InvalidMap,
  NotInFamily,
  PartitionViolation,
  Parse,
};

std::string_view to_string(ErrorKind kind);

/// Base of every error raised by the library; `kind()` allows dispatch
/// without string matching.
class OrderError : public std::runtime_error {
 public:
  OrderError(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// A relation failed a family precondition. `witness()` holds the element
/// ids that demonstrate the failure (e.g. a, x, b for a non-convex triple),
/// so front ends can render it with their own labels.
class NotInFamilyError : public OrderError {
 public:
  NotInFamilyError(std::string reason, std::vector<int> witness);

  const std::string& reason() const noexcept { return reason_; }
  const std::vector<int>& witness() const noexcept { return witness_; }

 private:
  std::string reason_;
  std::vector<int> witness_;
};

}  // namespace erne
