#pragma once

#include <stdexcept>
#include <string>

namespace motfact {

// Every failure mode of the library maps to one of these codes. Callers that
// need to branch on the cause should use Error::code() rather than parsing
// the message text.
enum class Err {
  NotInvertible,
  NotADisplacement,
  NotARotation,
  RealRootFound,
  OddDegree,
  NotMotionPolynomial,
  LeadingNotInvertible,
  NotMonic,
  NonGeneric,
  RemainderNotInvertible,
  ResidualTooLarge,
  NoSolution,
  FamilyOfSolutions,
  DegenerateZeroParameter,
  LineMotion,
  FlipDegenerate,
  BraceDegenerate,
  NoQuadraticFactorization,
  IdenticalAxes,
  InvalidLoop,
  PoleAtParameter,
  ParseError,
  InvalidInput,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}

  Err code() const { return code_; }

 private:
  Err code_;
};

class RealRootFoundError : public Error {
 public:
  RealRootFoundError(double t0, const std::string& what)
      : Error(Err::RealRootFound, what), t0_(t0) {}

  double root() const { return t0_; }

 private:
  double t0_;
};

class PoleAtParameterError : public Error {
 public:
  PoleAtParameterError(double t, const std::string& what)
      : Error(Err::PoleAtParameter, what), t_(t) {}

  double parameter() const { return t_; }

 private:
  double t_;
};

}  // namespace motfact
