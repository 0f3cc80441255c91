#include "algext/rational.hpp"

#include "algext/errors.hpp"

namespace algext {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::ContainmentViolation: return "ContainmentViolation";
    case ErrorKind::AntisymmetryViolation: return "AntisymmetryViolation";
    case ErrorKind::JacobiViolation: return "JacobiViolation";
    case ErrorKind::ModuleAxiomViolation: return "ModuleAxiomViolation";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::NotNilpotent: return "NotNilpotent";
    case ErrorKind::NotASubalgebra: return "NotASubalgebra";
    case ErrorKind::NotReductive: return "NotReductive";
    case ErrorKind::DecompositionFailure: return "DecompositionFailure";
    case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorKind::SubcomplexViolation: return "SubcomplexViolation";
    case ErrorKind::InjectivityFailure: return "InjectivityFailure";
    case ErrorKind::NotACocycle: return "NotACocycle";
    case ErrorKind::NotACoboundary: return "NotACoboundary";
    case ErrorKind::NotRelative: return "NotRelative";
    case ErrorKind::NotEquivariant: return "NotEquivariant";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::BadInverse: return "BadInverse";
    case ErrorKind::NotUnipotentForm: return "NotUnipotentForm";
    case ErrorKind::Mismatch: return "Mismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Error";
}

Rational parse_rational(const std::string& s) {
  Rational q;
  try {
    q = Rational(s);
  } catch (const std::exception&) {
    throw Error(ErrorKind::ParseError, "not a rational number: \"" + s + "\"");
  }
  if (denominator(q) == 0)
    throw Error(ErrorKind::ParseError, "zero denominator in \"" + s + "\"");
  // mpq string assignment does not reduce; arithmetic requires canonical form.
  mpq_canonicalize(q.backend().data());
  return q;
}

std::string rational_string(const Rational& q) { return q.str(); }

std::string int_string(const Int& n) { return n.str(); }

}  // namespace algext
