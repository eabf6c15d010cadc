#pragma once

#include <stdexcept>
#include <string>

namespace twistor {

enum class ErrorKind {
  ZeroPoint,
  MissingVariable,
  ZeroDegree,
  DegreeTooSmall,
  DependentPoints,
  NotOnGrassmannian,
  RankError,
  DegenerateLift,
  NonRealCoefficients,
  BothConstant,
  RankCollapse,
  DegenerateParametrization,
  AllResultantsZero,
  SyntaxError,
  WrongVariable,
  Internal,
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::ZeroPoint: return "ZeroPoint";
    case ErrorKind::MissingVariable: return "MissingVariable";
    case ErrorKind::ZeroDegree: return "ZeroDegree";
    case ErrorKind::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorKind::DependentPoints: return "DependentPoints";
    case ErrorKind::NotOnGrassmannian: return "NotOnGrassmannian";
    case ErrorKind::RankError: return "RankError";
    case ErrorKind::DegenerateLift: return "DegenerateLift";
    case ErrorKind::NonRealCoefficients: return "NonRealCoefficients";
    case ErrorKind::BothConstant: return "BothConstant";
    case ErrorKind::RankCollapse: return "RankCollapse";
    case ErrorKind::DegenerateParametrization: return "DegenerateParametrization";
    case ErrorKind::AllResultantsZero: return "AllResultantsZero";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::WrongVariable: return "WrongVariable";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace twistor
