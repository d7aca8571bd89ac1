#pragma once

// Shared fixtures for the test suites: compact constructors, reference data
// for the worked examples, and seeded random generators.

#include <random>
#include <vector>

#include "motfact/algebra.hpp"
#include "motfact/mpoly.hpp"

namespace testsupport {

using motfact::DualQuaternion;
using motfact::MotionPolynomial;
using motfact::Quaternion;

inline DualQuaternion dq(double w, double x, double y, double z, double dw = 0, double dx = 0,
                         double dy = 0, double dz = 0) {
  return DualQuaternion{{w, x, y, z}, {dw, dx, dy, dz}};
}

inline Quaternion quat(double w, double x, double y, double z) { return {w, x, y, z}; }

// Independent convolution product used as an oracle against operator*.
inline MotionPolynomial naive_mul(const MotionPolynomial& a, const MotionPolynomial& b) {
  std::vector<DualQuaternion> c(static_cast<size_t>(a.degree() + b.degree()) + 1);
  for (int i = 0; i <= a.degree(); ++i)
    for (int j = 0; j <= b.degree(); ++j)
      c[static_cast<size_t>(i + j)] = c[static_cast<size_t>(i + j)] + a.coeff(i) * b.coeff(j);
  return MotionPolynomial::raw(c);
}

// Three-pose example with the quadratic interpolant t^2 + (1-j)t + 1-i-j-k
// - eps((i-j-k)t - 1 - k) and its two factorizations.
namespace bennett_example {

inline DualQuaternion pose0() { return dq(1, -1, -1, -1, 1, 0, 0, 1); }
inline DualQuaternion pose1() { return dq(3, -1, -2, -1, 1, -1, 1, 2); }
inline DualQuaternion pose2() { return dq(1, 0, 0, 0); }

inline MotionPolynomial motion() {
  return MotionPolynomial::make({dq(1, -1, -1, -1, 1, 0, 0, 1), dq(1, 0, -1, 0, 0, -1, 1, 1),
                                 dq(1, 0, 0, 0)});
}

inline DualQuaternion h1() { return dq(0, 0, 1, 1, 0, 1, 1, -1); }
inline DualQuaternion h2() { return dq(-1, 0, 0, -1, 0, 0, -2, 0); }
inline DualQuaternion k1() { return dq(-1, -1, 0, 0, 0, 0, 0, -1); }
inline DualQuaternion k2() { return dq(0, 1, 1, 0, 0, 1, -1, 0); }

}  // namespace bennett_example

// Coupler motion of an RPRP linkage: (t-h1)(t-h2) = (t-k1)(t-k2) with
// translation factors h2, k1.
namespace rprp_example {

inline DualQuaternion h1() { return dq(0, 1, 1, 0, 0, 1, -1, 0); }
inline DualQuaternion h2() { return dq(1, 0, 0, 0, 0, 1, 3, -1); }
inline DualQuaternion k1() { return dq(1, 0, 0, 0, 0, 3, 1, -1); }
inline DualQuaternion k2() { return dq(0, 1, 1, 0, 0, -1, 1, 0); }

}  // namespace rprp_example

// Line-symmetric motion at a = b = 1, c = 2 and the 5R construction data.
namespace goldberg_example {

inline DualQuaternion h1() { return dq(0, 0, -0.8, 0.6, 0, 0, -1.2, -1.6); }
inline DualQuaternion h2() { return dq(0, 0, 0, -1); }
inline DualQuaternion p() { return dq(0, 0, 1, -1, 0, 0, 2.5, 2.5); }
inline DualQuaternion f() { return dq(0, 0, 0.2, -1.4, 0, 0, 6.3, 0.9); }
inline DualQuaternion g() { return dq(0, 0, 0, 1, 0, 0, -5, 0); }
inline DualQuaternion q() { return dq(0, 0, 1, 1, 0, 0, -2.5, 2.5); }

}  // namespace goldberg_example

}  // namespace testsupport
