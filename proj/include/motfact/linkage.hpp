#pragma once

// Linkage data model and verification: joints carry dual quaternion
// generators, links are sets of joint indices, and loops are signed joint
// sequences whose factor product must stay a real multiple of 1 for every
// parameter value. The conjugate flag encodes the identity
// (t - h)^{-1} == (t - conj(h)) up to real polynomial factors.

#include <string>
#include <vector>

#include "motfact/mpoly.hpp"

namespace motfact {

enum class JointKind { Revolute, Prismatic };

struct Joint {
  JointKind kind = JointKind::Revolute;
  DualQuaternion generator;
  std::string label;
};

struct LoopEntry {
  int joint = 0;
  bool conjugate = false;
};

struct Linkage {
  std::vector<Joint> joints;
  std::vector<std::vector<int>> links;
  std::vector<std::vector<LoopEntry>> loops;
  std::string type;
};

// Checks the structural invariants: loops reference valid joints, every
// joint belongs to exactly two links, and the link graph is connected.
// Throws Error(InvalidInput) / Error(InvalidLoop) with a description.
void validate_linkage(const Linkage& l);

Joint make_joint(const DualQuaternion& generator, const std::string& label);

// {±10^k : k = -2..2} ∪ {0, inf}: covers near-pole and asymptotic
// configurations.
std::vector<double> standard_sweep();

// Max over the sample parameters of the deviation of the evaluated loop
// product from a real scalar multiple of 1 (all non-scalar coordinates
// relative to the scalar magnitude). Samples may include infinity.
double loop_residual(const Linkage& l, const std::vector<LoopEntry>& loop,
                     const std::vector<double>& ts);
double loop_residual(const Linkage& l, size_t loop_index, const std::vector<double>& ts);

// Largest loop residual over all declared loops.
double max_loop_residual(const Linkage& l, const std::vector<double>& ts);

struct DHParams {
  double distance = 0;  // common normal length, >= 0
  double twist = 0;     // angle between directions, in (-pi, pi]
  double offset1 = 0;   // foot of the common normal along axis 1
  double offset2 = 0;   // foot of the common normal along axis 2
};

// Denavit-Hartenberg parameters of the relative position of two axes.
// Twist is measured from L1 to L2 about the common normal oriented by
// dir(L1) x dir(L2); for parallel axes the twist is 0 (pi when
// anti-parallel), the distance is the perpendicular distance and the
// offsets are 0 by convention. Throws Error(IdenticalAxes) when the axes
// coincide as unoriented lines.
DHParams dh_from_axes(const Line& l1, const Line& l2);

// Trajectory of the point x under the motion C at the sample parameters
// (infinity allowed). Throws PoleAtParameterError when the primal part
// vanishes at a sample.
std::vector<Vec3> trajectory(const MotionPolynomial& c, const Vec3& x,
                             const std::vector<double>& ts);

}  // namespace motfact
