#pragma once

// Generic factorization of motion polynomials into linear rotation factors.
// A factorization is labeled by an ordering of the irreducible quadratic
// factors of the norm polynomial; permuting the labels enumerates all
// factorizations (n! in general).

#include <optional>
#include <string>
#include <vector>

#include "motfact/mpoly.hpp"

namespace motfact {

class RemainderNotInvertibleError : public Error {
 public:
  RemainderNotInvertibleError(const DualQuaternion& r1, const DualQuaternion& r0,
                              const std::string& what)
      : Error(Err::RemainderNotInvertible, what), r1_(r1), r0_(r0) {}

  // The offending linear remainder R = r1 t + r0.
  const DualQuaternion& r1() const { return r1_; }
  const DualQuaternion& r0() const { return r0_; }

 private:
  DualQuaternion r1_, r0_;
};

// Factors C = (t-h_1)...(t-h_n) with (t-h_i)(t-conj(h_i)) = order[i-1].
// C is made monic first; requires a generic primal part (no real factor) and
// that `order` is a permutation of quadratic_factorization(norm_poly(C)).
// Throws NonGeneric, RemainderNotInvertibleError, Error(ResidualTooLarge).
Factorization factor_with_order(const MotionPolynomial& c,
                                const std::vector<QuadraticFactor>& order);

// Convenience overload: permutation indices into the sorted factor list of
// the norm polynomial.
Factorization factor_with_order(const MotionPolynomial& c, const std::vector<int>& permutation);

struct FactorizationAttempt {
  std::vector<int> permutation;
  std::optional<Factorization> result;
  std::string error;  // empty on success
};

struct AllFactorizations {
  // Distinct factorizations, in order of first appearance over the
  // lexicographic permutation sweep.
  std::vector<Factorization> factorizations;
  // One entry per permutation, in lexicographic order.
  std::vector<FactorizationAttempt> attempts;
  // True when permutations collapsed to fewer distinct factorizations
  // (repeated norm quadratics, the coincident-dyad situation).
  bool coincident = false;
};

AllFactorizations all_factorizations(const MotionPolynomial& c);

// Max absolute coefficient deviation between the factor product and the
// monic form of C, combined with a re-check of each recorded factor norm.
double verify_factorization(const MotionPolynomial& c, const Factorization& f);

namespace detail {

// Core of the factorization loop without the genericity gate; used for the
// RPRP special case where a double real root of the norm stands in for an
// irreducible quadratic.
Factorization factor_with_quadratics(const MotionPolynomial& monic_c,
                                     const std::vector<QuadraticFactor>& order,
                                     bool enforce_generic);

}  // namespace detail

}  // namespace motfact
