#pragma once

#include <stdexcept>
#include <string>

namespace tilekit {

enum class ErrorKind {
  TooFewPoints,
  NotCentrallySymmetric,
  NotStrictlyConvex,
  VerticesNotOnLattice,
  SingularMap,
  NotCentered,
  NonIntegerMultiplicity,
  BolleFailed,
  MultiplicityMismatch,
  NotCertified,
  RankDeficientGenerators,
  ParameterOutOfRange,
  ClosureViolated,
  EdgeNotReducible,
  IrrationalInput,
  UnknownFamily,
  BadInput,
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::TooFewPoints: return "TooFewPoints";
    case ErrorKind::NotCentrallySymmetric: return "NotCentrallySymmetric";
    case ErrorKind::NotStrictlyConvex: return "NotStrictlyConvex";
    case ErrorKind::VerticesNotOnLattice: return "VerticesNotOnLattice";
    case ErrorKind::SingularMap: return "SingularMap";
    case ErrorKind::NotCentered: return "NotCentered";
    case ErrorKind::NonIntegerMultiplicity: return "NonIntegerMultiplicity";
    case ErrorKind::BolleFailed: return "BolleFailed";
    case ErrorKind::MultiplicityMismatch: return "MultiplicityMismatch";
    case ErrorKind::NotCertified: return "NotCertified";
    case ErrorKind::RankDeficientGenerators: return "RankDeficientGenerators";
    case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorKind::ClosureViolated: return "ClosureViolated";
    case ErrorKind::EdgeNotReducible: return "EdgeNotReducible";
    case ErrorKind::IrrationalInput: return "IrrationalInput";
    case ErrorKind::UnknownFamily: return "UnknownFamily";
    case ErrorKind::BadInput: return "BadInput";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
        kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace tilekit
