#include "hartogs/error.hpp"

namespace hartogs {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::NegativeCoefficient: return "NegativeCoefficient";
    case ErrorKind::MissingLinearTerm: return "MissingLinearTerm";
    case ErrorKind::ConstantTerm: return "ConstantTerm";
    case ErrorKind::ConstantTermPresent: return "ConstantTermPresent";
    case ErrorKind::WindowTooSmall: return "WindowTooSmall";
    case ErrorKind::ZeroCoordinate: return "ZeroCoordinate";
    case ErrorKind::OutsideDomain: return "OutsideDomain";
    case ErrorKind::InvalidMultiplicity: return "InvalidMultiplicity";
    case ErrorKind::EmptyWindow: return "EmptyWindow";
    case ErrorKind::CoeffTableTooSmall: return "CoeffTableTooSmall";
    case ErrorKind::NotNAdmissible: return "NotNAdmissible";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::WrongDimension: return "WrongDimension";
    case ErrorKind::NotHereditaryPolynomial: return "NotHereditaryPolynomial";
    case ErrorKind::NonCommuting: return "NonCommuting";
    case ErrorKind::PointOutsideDomain: return "PointOutsideDomain";
    case ErrorKind::DuplicatePoints: return "DuplicatePoints";
    case ErrorKind::UnknownCommand: return "UnknownCommand";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

}  // namespace hartogs
