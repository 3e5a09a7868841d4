#pragma once

#include <stdexcept>
#include <string>

namespace normgraph {

enum class ErrorCode {
  RowOutOfAmbient,
  UnknownLabel,
  AmbientMismatch,
  NotASubgroup,
  BadPartition,
  TooLargeToEnumerate,
  NotWellDefined,
  NotInvertible,
  ValidationFailed,
  UnknownEdge,
  UnknownVariable,
  AlphabetMismatch,
  NotAStateEdge,
  FragmentsOverlap,
  EdgeIsCutSet,
  NotCycleFree,
  Disconnected,
  NotTrimProper,
  NotInExternalBehavior,
  NotInternallyProper,
  NotInternallyTrim,
  MissingIncoming,
  SelfLoop,
  ParseError,
  IoError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace normgraph
