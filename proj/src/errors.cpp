#include "motfact/errors.hpp"

namespace motfact {

const char* err_name(Err e) {
  switch (e) {
    case Err::NotInvertible: return "NotInvertible";
    case Err::NotADisplacement: return "NotADisplacement";
    case Err::NotARotation: return "NotARotation";
    case Err::RealRootFound: return "RealRootFound";
    case Err::OddDegree: return "OddDegree";
    case Err::NotMotionPolynomial: return "NotMotionPolynomial";
    case Err::LeadingNotInvertible: return "LeadingNotInvertible";
    case Err::NotMonic: return "NotMonic";
    case Err::NonGeneric: return "NonGeneric";
    case Err::RemainderNotInvertible: return "RemainderNotInvertible";
    case Err::ResidualTooLarge: return "ResidualTooLarge";
    case Err::NoSolution: return "NoSolution";
    case Err::FamilyOfSolutions: return "FamilyOfSolutions";
    case Err::DegenerateZeroParameter: return "DegenerateZeroParameter";
    case Err::LineMotion: return "LineMotion";
    case Err::FlipDegenerate: return "FlipDegenerate";
    case Err::BraceDegenerate: return "BraceDegenerate";
    case Err::NoQuadraticFactorization: return "NoQuadraticFactorization";
    case Err::IdenticalAxes: return "IdenticalAxes";
    case Err::InvalidLoop: return "InvalidLoop";
    case Err::PoleAtParameter: return "PoleAtParameter";
    case Err::ParseError: return "ParseError";
    case Err::InvalidInput: return "InvalidInput";
  }
  return "UnknownError";
}

}  // namespace motfact
