#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace plectic {

enum class ErrorKind {
  InvalidInput,
  SizeMismatch,
  DegreeError,
  ChartMismatch,
  NotACocycle,
  NotPerfect,
  NotInvariant,
  NotClosed,
  NotSkew,
  Obstructed,
  NoPrimitive,
  ParseError,
  UnknownCoordinate,
  MorphismCheckFailed,
  PropertyPViolated,
  CoboundaryMismatch,
  NoHamiltonianWitness,
  UnsupportedDimension,
};

std::string_view kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(kind_name(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error(ErrorKind::ParseError, "at " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace plectic
