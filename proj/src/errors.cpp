#include "erne/errors.hpp"

namespace erne {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::AntisymmetryViolation: return "AntisymmetryViolation";
    case ErrorKind::NotTransitivelyClosed: return "NotTransitivelyClosed";
    case ErrorKind::ForeignElement: return "ForeignElement";
    case ErrorKind::OverlappingCarriers: return "OverlappingCarriers";
    case ErrorKind::CarrierMismatch: return "CarrierMismatch";
    case ErrorKind::LimitExceeded: return "LimitExceeded";
    case ErrorKind::NotMonotone: return "NotMonotone";
    case ErrorKind::InvalidMap: return "InvalidMap";
    case ErrorKind::NotInFamily: return "NotInFamily";
    case ErrorKind::PartitionViolation: return "PartitionViolation";
    case ErrorKind::Parse: return "ParseError";
  }
  return "Unknown";
}

OrderError::OrderError(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

NotInFamilyError::NotInFamilyError(std::string reason, std::vector<int> witness)
    : OrderError(ErrorKind::NotInFamily, reason), reason_(std::move(reason)), witness_(std::move(witness)) {}

}  // namespace erne
