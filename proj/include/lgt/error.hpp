#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lgt {

enum class ErrorKind {
  ParseError,
  CycleError,
  NotALattice,
  NoBoundsError,
  DuplicateElement,
  InvalidName,
  UnknownElement,
  UnknownObject,
  NotAFrame,
  SizeLimitExceeded,
  NotATopology,
  BaseNotOpen,
  NotACover,
  NotTotal,
  NotJoinPreserving,
  NotMeetPreserving,
  SourceTargetMismatch,
  TopologyCarrierMismatch,
  ImageNotDownSet,
  IndexOutOfRange,
  NotOnto,
  AdjointNotJoinPreserving,
  NotAPartition,
  UnknownTheoremId,
  UnknownGoal,
};

std::string_view error_kind_name(ErrorKind kind) noexcept;

// Every failure raised by the library. The kind is part of the public
// contract (the CLI prints it verbatim); the message carries the offending
// elements or pair.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace lgt
