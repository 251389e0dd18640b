#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace netmetric {

enum class ErrorKind {
  ShapeMismatch,
  AsymmetricMatrix,
  NonzeroDiagonal,
  NonpositiveOffDiagonal,
  NonFiniteValue,
  DuplicateLabel,
  ParseError,
  IoError,
  DimensionMismatch,
  InvalidPoint,
  DuplicatePoint,
  InvalidCorrespondence,
  TooLarge,
  DegenerateInput,
  InsufficientData,
  InvalidN,
  InvalidParameter,
  InvalidGamma,
  DegenerateFeature,
  InvalidConfig,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::AsymmetricMatrix: return "AsymmetricMatrix";
    case ErrorKind::NonzeroDiagonal: return "NonzeroDiagonal";
    case ErrorKind::NonpositiveOffDiagonal: return "NonpositiveOffDiagonal";
    case ErrorKind::NonFiniteValue: return "NonFiniteValue";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidPoint: return "InvalidPoint";
    case ErrorKind::DuplicatePoint: return "DuplicatePoint";
    case ErrorKind::InvalidCorrespondence: return "InvalidCorrespondence";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::InsufficientData: return "InsufficientData";
    case ErrorKind::InvalidN: return "InvalidN";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::InvalidGamma: return "InvalidGamma";
    case ErrorKind::DegenerateFeature: return "DegenerateFeature";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind; the
/// message names the offending indices or positions.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace netmetric
