#pragma once

// Exceptional factorizations that evade the generic algorithm: the
// circular-translation family, elliptic translations via the multiplication
// trick (planar and spatial factor lists), the bracing construction that
// assembles those factors into a linkage, and trajectory-preserving right
// multiplication.

#include <random>
#include <utility>

#include "motfact/bennett.hpp"
#include "motfact/factor.hpp"
#include "motfact/linkage.hpp"

namespace motfact {

// Semi-axis parameters of the translation motion t^2 + 1 + eps(b j t + a i).
struct TranslationMotionSpec {
  double a = 1, b = 1;

  // Requires a >= b > 0.
  static TranslationMotionSpec make(double a, double b);

  bool circular() const { return std::abs(a - b) <= tolerance() * (1.0 + a); }
};

// The motion polynomial t^2 + 1 + eps(b j t + a i); primal part real, hence
// non-generic by construction.
MotionPolynomial elliptic_translation(const TranslationMotionSpec& spec);

// One 2R chain of the parallelogram family of a circular translation:
// h1 = k + eps(lambda i + (mu - a) j), h2 = -k - eps(lambda i + mu j).
std::pair<DualQuaternion, DualQuaternion> circular_translation_factors(double a, double lambda,
                                                                       double mu);

// Feasibility data of the quadratic factorization ansatz
// C = (t - h1)(t - h2): the primal comparison forces a unit vector (x, y, z)
// with x = 0 and z = a/b.
struct CircularFamily {
  double x = 0, y = 0, z = 1;
};

// Succeeds exactly for circular specs; elliptic translations (a > b) do not
// admit quadratic factorizations and raise NoQuadraticFactorization.
CircularFamily try_quadratic_factorization(const TranslationMotionSpec& spec);

// Planar factorization of (t^2 + 1) * C into four z-parallel rotation
// factors. Defined for a = b as well (the circular closed form is then also
// available).
Factorization multiplication_trick_planar(const TranslationMotionSpec& spec);

// Spatial factorization of (t^2 + 1) * C with parallel first/second and
// parallel third/fourth axes, the two directions distinct.
Factorization multiplication_trick_spatial(const TranslationMotionSpec& spec);

// A degree-3 motion with only planar trajectories: the elliptic translation
// right-multiplied by t - k. Same origin trajectory as the translation.
MotionPolynomial darboux_motion(const TranslationMotionSpec& spec);

// Closed-form factorization of darboux_motion into three rotation factors
// (a two-parameter family; lambda and mu select one member).
Factorization darboux_factors(const TranslationMotionSpec& spec, double lambda = 0,
                              double mu = 0);

struct BracedChain {
  Linkage linkage;
  std::vector<DualQuaternion> m;  // m_0 .. m_n
  std::vector<DualQuaternion> k;  // k_1 .. k_n
  int terminal_link = -1;         // the link of m_n and h_n carries the motion
  double max_cell_residual = 0;
  bool planar_cells = false;      // all cell axes parallel
};

// Braces each factor h_i with a four-bar cell h_i, m_i, k_i, m_{i-1} via the
// recursion (t - m_{i-1}^{-1})(t - h_i) = (t - k_i)(t - m_i^{-1}); cells are
// anti-parallelograms for planar data and Bennett loops otherwise. Throws
// Error(BraceDegenerate) when a recursion step fails for this m0.
BracedChain brace_chain(const Factorization& factors, const DualQuaternion& m0);

// Retries with fresh random rotations m0 (planar by default).
BracedChain brace_chain(const Factorization& factors, std::mt19937_64& rng,
                        bool planar_m0 = true, int max_retries = 10);

// C * H for a quaternion-coefficient H (ascending coefficients, invertible
// leading coefficient). Changes the motion but not the trajectory of the
// origin.
MotionPolynomial right_multiply(const MotionPolynomial& c, const std::vector<Quaternion>& h);

}  // namespace motfact
