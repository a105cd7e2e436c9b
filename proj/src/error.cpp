#include "lgt/error.hpp"

namespace lgt {

std::string_view error_kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::CycleError: return "CycleError";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NoBoundsError: return "NoBoundsError";
    case ErrorKind::DuplicateElement: return "DuplicateElement";
    case ErrorKind::InvalidName: return "InvalidName";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::UnknownObject: return "UnknownObject";
    case ErrorKind::NotAFrame: return "NotAFrame";
    case ErrorKind::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorKind::NotATopology: return "NotATopology";
    case ErrorKind::BaseNotOpen: return "BaseNotOpen";
    case ErrorKind::NotACover: return "NotACover";
    case ErrorKind::NotTotal: return "NotTotal";
    case ErrorKind::NotJoinPreserving: return "NotJoinPreserving";
    case ErrorKind::NotMeetPreserving: return "NotMeetPreserving";
    case ErrorKind::SourceTargetMismatch: return "SourceTargetMismatch";
    case ErrorKind::TopologyCarrierMismatch: return "TopologyCarrierMismatch";
    case ErrorKind::ImageNotDownSet: return "ImageNotDownSet";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotOnto: return "NotOnto";
    case ErrorKind::AdjointNotJoinPreserving: return "AdjointNotJoinPreserving";
    case ErrorKind::NotAPartition: return "NotAPartition";
    case ErrorKind::UnknownTheoremId: return "UnknownTheoremId";
    case ErrorKind::UnknownGoal: return "UnknownGoal";
  }
  return "Error";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
      kind_(kind) {}

}  // namespace lgt
