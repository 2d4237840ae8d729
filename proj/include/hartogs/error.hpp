#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hartogs {

enum class ErrorKind {
  MalformedInput,
  NegativeCoefficient,
  MissingLinearTerm,
  ConstantTerm,
  ConstantTermPresent,
  WindowTooSmall,
  ZeroCoordinate,
  OutsideDomain,
  InvalidMultiplicity,
  EmptyWindow,
  CoeffTableTooSmall,
  NotNAdmissible,
  NotAdmissible,
  WrongDimension,
  NotHereditaryPolynomial,
  NonCommuting,
  PointOutsideDomain,
  DuplicatePoints,
  UnknownCommand,
  InvalidConfig,
};

std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hartogs
