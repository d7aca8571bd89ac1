#pragma once

// Real-coefficient polynomial numerics: root finding via companion-matrix
// eigenvalues with Newton refinement, factorization into monic irreducible
// quadratics, and the approximate gcd machinery used for genericity and
// repeated-factor tests. Inputs in this library are low degree (<= 8) and
// well scaled.

#include <complex>
#include <vector>

#include "motfact/algebra.hpp"
#include "motfact/errors.hpp"

namespace motfact {

class RealPoly {
 public:
  // Zero polynomial.
  RealPoly() : c_{0.0} {}

  // Coefficients in ascending degree; trailing near-zero coefficients are
  // trimmed relative to the largest magnitude.
  explicit RealPoly(std::vector<double> coeffs);
  RealPoly(std::initializer_list<double> coeffs) : RealPoly(std::vector<double>(coeffs)) {}

  static RealPoly constant(double v) { return RealPoly(std::vector<double>{v}); }
  static RealPoly monomial(int degree, double coeff = 1.0);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<double>& coeffs() const { return c_; }
  double operator[](int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(i)] : 0.0;
  }
  double leading() const { return c_.back(); }
  double max_abs() const;
  bool is_zero() const { return c_.size() == 1 && c_[0] == 0.0; }

  double eval(double t) const;
  std::complex<double> eval(std::complex<double> t) const;

  RealPoly derivative() const;
  RealPoly monic() const;

  // Drops coefficients with |c| <= cutoff from the top, keeping at least the
  // constant term.
  RealPoly trimmed(double cutoff) const;

 private:
  std::vector<double> c_;
};

RealPoly operator+(const RealPoly& a, const RealPoly& b);
RealPoly operator-(const RealPoly& a, const RealPoly& b);
RealPoly operator*(const RealPoly& a, const RealPoly& b);
RealPoly operator*(double s, const RealPoly& a);

struct RealDivMod {
  RealPoly quotient, remainder;
};
RealDivMod divmod(const RealPoly& a, const RealPoly& b);

// Euclidean remainder sequence with coefficient cutoff; result is monic.
RealPoly approx_gcd(RealPoly a, RealPoly b, double cutoff);

// All complex roots, companion-matrix eigenvalues refined by Newton steps.
std::vector<std::complex<double>> poly_roots(const RealPoly& p);

// Monic t^2 + a t + b, irreducible over R within tolerance (a^2 - 4b < tol).
struct QuadraticFactor {
  double a = 0, b = 0;

  RealPoly poly() const { return RealPoly{b, a, 1.0}; }
};

bool quadratic_close(const QuadraticFactor& m1, const QuadraticFactor& m2, double tol);

// Splits an even-degree polynomial with positive leading coefficient and no
// real roots into monic irreducible quadratics, sorted lexicographically by
// (a, b). Throws RealRootFoundError / Error(OddDegree).
std::vector<QuadraticFactor> quadratic_factorization(const RealPoly& n);

// Approximate monic gcd of the four real coordinate polynomials of a
// quaternion-coefficient polynomial (given by its ascending coefficients).
// Degree 0 result means the polynomial has no real factor.
RealPoly greatest_real_factor(const std::vector<Quaternion>& coeffs);

// Approximate gcd(n, n'); degree >= 2 signals repeated quadratic factors.
RealPoly repeated_quadratic(const RealPoly& n);

// Discriminant of a quartic (degree <= 4 is padded with zeros).
double quartic_discriminant(const RealPoly& p);

}  // namespace motfact
