#pragma once

// Polynomials over the dual quaternions. The indeterminate t commutes with
// all coefficients; multiplication and right division therefore preserve the
// left-to-right order of coefficient products. Evaluation substitutes powers
// of the argument on the right of each coefficient: C(h) = sum c_i h^i, so
// linear right factors correspond to zeros (and not vice versa for left
// factors).

#include <optional>
#include <vector>

#include "motfact/algebra.hpp"
#include "motfact/rpoly.hpp"

namespace motfact {

class MotionPolynomial {
 public:
  MotionPolynomial() : c_{DualQuaternion::real(0)} {}

  // Validated construction: trims trailing zero coefficients, requires an
  // invertible leading coefficient and a real norm polynomial.
  // Throws NotMotionPolynomial / LeadingNotInvertible.
  static MotionPolynomial make(std::vector<DualQuaternion> coeffs);

  // Unvalidated construction for intermediate results (quotients,
  // remainders) that need not satisfy the motion polynomial contract.
  static MotionPolynomial raw(std::vector<DualQuaternion> coeffs);

  static MotionPolynomial one() { return raw({DualQuaternion::identity()}); }
  // t - h
  static MotionPolynomial linear(const DualQuaternion& h);
  static MotionPolynomial from_real(const RealPoly& p);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<DualQuaternion>& coeffs() const { return c_; }
  const DualQuaternion& coeff(int i) const { return c_[static_cast<size_t>(i)]; }
  const DualQuaternion& leading() const { return c_.back(); }
  bool is_validated() const { return validated_; }
  bool is_zero() const;

  double max_mag() const;  // largest mag8 over coefficients

  // Evaluation at a real parameter (a ring homomorphism since t is real).
  DualQuaternion eval(double t) const;
  // Right-substitution value C(h) = sum c_i h^i.
  DualQuaternion eval_at(const DualQuaternion& h) const;
  // C(inf) = leading coefficient; the distinguished parameter value that
  // completes rational curves.
  DualQuaternion eval_at_infinity() const { return c_.back(); }

  std::vector<Quaternion> primal() const;
  std::vector<Quaternion> dual() const;

  MotionPolynomial conjugated() const;

  // Checks the motion polynomial contract and flips the validity flag;
  // throws on failure.
  MotionPolynomial& validate();

  // Norm polynomial C conj(C) as a real polynomial of degree 2 deg(C); the
  // dual part is asserted to vanish. Throws NotMotionPolynomial.
  RealPoly norm_poly() const;

 private:
  explicit MotionPolynomial(std::vector<DualQuaternion> coeffs, bool validated)
      : c_(std::move(coeffs)), validated_(validated) {}

  friend MotionPolynomial operator*(const MotionPolynomial& a, const MotionPolynomial& b);

  std::vector<DualQuaternion> c_;
  bool validated_ = false;
};

MotionPolynomial operator+(const MotionPolynomial& a, const MotionPolynomial& b);
MotionPolynomial operator-(const MotionPolynomial& a, const MotionPolynomial& b);
// Convolution product; a product of validated motion polynomials is again a
// motion polynomial (the norm is multiplicative), so the flag is preserved.
MotionPolynomial operator*(const MotionPolynomial& a, const MotionPolynomial& b);
MotionPolynomial operator*(double s, const MotionPolynomial& a);
MotionPolynomial operator*(const DualQuaternion& s, const MotionPolynomial& a);   // left scale
MotionPolynomial operator*(const MotionPolynomial& a, const DualQuaternion& s);   // right scale

// Max coordinate distance between coefficient lists (absolute).
double coeff_distance(const MotionPolynomial& a, const MotionPolynomial& b);

struct DivisionResult {
  MotionPolynomial quotient, remainder;
};

// Right division A = Q B + R with deg R < deg B; requires B monic. Uses only
// coefficient multiplication in the order R - B c t^n, never quaternion
// division. Throws NotMonic.
DivisionResult divide(const MotionPolynomial& a, const MotionPolynomial& b);

struct MonicResult {
  MotionPolynomial poly;
  // The original leading coefficient c_n; the monic polynomial is
  // c_n^{-1} C. When c_n is real the monic polynomial represents the same
  // motion projectively, otherwise the left-transformed motion.
  DualQuaternion leading;
  bool motion_preserved = false;
};

// Left-multiplies by the inverse of the leading coefficient.
// Throws LeadingNotInvertible.
MonicResult make_monic(const MotionPolynomial& c);

// Ordered linear-factor decomposition C = (t - h_1) ... (t - h_n) together
// with the norm quadratic (t - h_i)(t - conj(h_i)) of each factor.
struct Factorization {
  std::vector<DualQuaternion> factors;
  std::vector<QuadraticFactor> norms;
};

MotionPolynomial product_of(const Factorization& f);

}  // namespace motfact
