#pragma once

// Bennett linkage synthesis from three poses, classification of the
// degenerate situations, the line-symmetric motion family, Bennett flips and
// the 5R/6R replacement linkages built from them.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "motfact/factor.hpp"
#include "motfact/linkage.hpp"

namespace motfact {

// A rigid-body pose as a projective point of the Study quadric outside the
// exceptional three-space.
struct Pose {
  DualQuaternion value;

  // Validates the Study condition and a nonzero primal part.
  static Pose make(const DualQuaternion& h);
};

enum class DiagnosisKind {
  Bennett4R,
  CoincidentDyads,
  RPRP,
  CurvilinearTranslation,
  LineMotion,
  PlanarOrSphericalFamily,
  NoSolution,
};

const char* diagnosis_name(DiagnosisKind k);

struct SynthesisDiagnosis {
  DiagnosisKind kind = DiagnosisKind::NoSolution;
  std::string detail;
};

struct Interpolation {
  MotionPolynomial c;
  double lambda = 0, mu = 0;
};

// Quadratic interpolant C with C(0) = p0, C(1) = p1, C(inf) = p2 up to
// scalar factors; lambda and mu solve the vanishing of the dual part of the
// norm polynomial. The general case is reduced to p2 = 1 by right
// multiplication with p2^{-1} and composed back afterwards.
// Throws Error with code NoSolution, FamilyOfSolutions,
// DegenerateZeroParameter or LineMotion.
Interpolation interpolate_poses(const Pose& p0, const Pose& p1, const Pose& p2);

struct SynthesisOutcome {
  SynthesisDiagnosis diagnosis;
  std::optional<Linkage> linkage;             // present iff kind == Bennett4R
  std::optional<MotionPolynomial> motion;     // the interpolant, when reached
  double lambda = 0, mu = 0;
  std::vector<Factorization> factorizations;  // dyads computed along the way
  RealPoly closure;                           // real loop-closure polynomial
  double loop_residual = 0;
  int coupler_link = -1;
};

// Full synthesis pipeline: interpolate, test genericity, factor both orders
// and assemble the 4R loop, or report the precise degenerate situation.
SynthesisOutcome synthesize_bennett(const Pose& p0, const Pose& p1, const Pose& p2);

// The line-symmetric motion obtained by reflecting in one ruling family of
// the hyperboloid x^2 b^2 c^2 + y^2 a^2 c^2 - z^2 a^2 b^2 = a^2 b^2 c^2.
// Requires a, b, c != 0.
MotionPolynomial line_symmetric_motion(double a, double b, double c);

struct DiscriminantReport {
  double discriminant = 0;    // discriminant of the norm polynomial
  bool repeated = false;      // norm is the square of one quadratic
  RealPoly repeated_factor;   // the quadratic, when repeated
};

DiscriminantReport line_symmetric_discriminant(double a, double b, double c);

struct FlipResult {
  DualQuaternion f, g, r, q;
  double residual = 0;  // max deviation of the two defining identities
};

// Re-factors (t-h1)(t-p) = (t-f)(t-g) and (t-conj(h2))(t-p) = (t-q)(t-conj(r))
// so that f and q carry the norm quadratic of p. Throws
// Error(FlipDegenerate) when the alternative factorization coincides or the
// factorization algorithm fails for this p.
FlipResult bennett_flip(const DualQuaternion& h1, const DualQuaternion& h2,
                        const DualQuaternion& p);

struct ReplacementLinkage {
  Linkage linkage;
  FlipResult flip;
  bool collapsed_to_5r = false;
  int coupler_link = -1;  // link performing the motion (t-h1)(t-h2)
  double max_residual = 0;
};

// Assembles h1, h2, q, conj(r), conj(g), conj(f) into an over-constrained 6R
// loop (Waldron's double Bennett hybrid); when the axes of g and r coincide
// the two joints merge and the result is a 5R Goldberg linkage.
ReplacementLinkage build_replacement_linkage(const DualQuaternion& h1, const DualQuaternion& h2,
                                             const DualQuaternion& p);

// Retries with fresh random rotations p until the flip succeeds.
ReplacementLinkage build_replacement_linkage(const DualQuaternion& h1, const DualQuaternion& h2,
                                             std::mt19937_64& rng, int max_retries = 10);

// Random rotation generator: components uniform in [-1,1], dual part
// projected onto the Study condition.
DualQuaternion random_rotation(std::mt19937_64& rng);

// Random rotation about a z-parallel axis positioned in the xy-plane.
DualQuaternion random_planar_rotation(std::mt19937_64& rng);

// Random displacement (general Study quadric point with invertible primal).
DualQuaternion random_displacement(std::mt19937_64& rng);

}  // namespace motfact
