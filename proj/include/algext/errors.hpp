#pragma once

#include <stdexcept>
#include <string>

namespace algext {

enum class ErrorKind {
  // linear algebra
  ShapeMismatch,
  ContainmentViolation,
  // Lie structure validation
  AntisymmetryViolation,
  JacobiViolation,
  ModuleAxiomViolation,
  NotAnIdeal,
  NotNilpotent,
  NotASubalgebra,
  NotReductive,
  DecompositionFailure,
  // cohomology
  DegreeOutOfRange,
  SubcomplexViolation,
  InjectivityFailure,
  NotACocycle,
  NotACoboundary,
  NotRelative,
  NotEquivariant,
  // polynomial groups
  NotAssociative,
  NoIdentity,
  BadInverse,
  NotUnipotentForm,
  Mismatch,
  // io
  ParseError,
  ValidationError,
  IoError,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace algext
