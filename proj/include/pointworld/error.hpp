#pragma once

#include <stdexcept>
#include <string>

namespace pointworld {

enum class ErrorKind {
  SyntaxError,
  DuplicatePoint,
  UnknownPoint,
  SelfLoop,
  DuplicateConnection,
  BadWeight,
  InvalidWalk,
  NotASegment,
  DirectedUnsupported,
  NonUnitWeights,
  ZeroRadiusUnderNZ,
  BadFamilyParameter,
  TooLarge,
  DuplicateId,
  UnknownId,
  JustifiedNonClaim,
  CyclicDependency,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::DuplicatePoint: return "DuplicatePoint";
    case ErrorKind::UnknownPoint: return "UnknownPoint";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::DuplicateConnection: return "DuplicateConnection";
    case ErrorKind::BadWeight: return "BadWeight";
    case ErrorKind::InvalidWalk: return "InvalidWalk";
    case ErrorKind::NotASegment: return "NotASegment";
    case ErrorKind::DirectedUnsupported: return "DirectedUnsupported";
    case ErrorKind::NonUnitWeights: return "NonUnitWeights";
    case ErrorKind::ZeroRadiusUnderNZ: return "ZeroRadiusUnderNZ";
    case ErrorKind::BadFamilyParameter: return "BadFamilyParameter";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::UnknownId: return "UnknownId";
    case ErrorKind::JustifiedNonClaim: return "JustifiedNonClaim";
    case ErrorKind::CyclicDependency: return "CyclicDependency";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  // line = 1-based line number in the offending input file, 0 if not file-based.
  Error(ErrorKind kind, std::string message, int line)
      : std::runtime_error(std::string(to_string(kind)) + " (line " +
                           std::to_string(line) + "): " + message),
        kind_(kind),
        line_(line) {}

  ErrorKind kind() const { return kind_; }
  int line() const { return line_; }

 private:
  ErrorKind kind_;
  int line_ = 0;
};

}  // namespace pointworld
