#pragma once

// Quaternion and dual quaternion arithmetic for rational kinematics.
//
// Conventions used throughout the library:
//   - norm(q) means q * conj(q), i.e. the squared magnitude (no square root);
//   - a point (x,y,z) is embedded as the vector quaternion x*i + y*j + z*k;
//   - a dual quaternion h = p + eps*d acts on points as (p x conj(p) +
//     2 p conj(d)) / norm(p), valid when the Study condition dot4(p,d) = 0
//     holds;
//   - h and lambda*h describe the same displacement (projective objects).

#include <array>
#include <cmath>

#include "motfact/errors.hpp"

namespace motfact {

// Global zero tolerance, applied relative to the largest magnitude in the
// expression being tested. Default 1e-9.
double tolerance();
void set_tolerance(double tol);

struct Vec3 {
  double x = 0, y = 0, z = 0;
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
inline Vec3 operator-(const Vec3& v) { return {-v.x, -v.y, -v.z}; }
inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double length(const Vec3& v) { return std::sqrt(dot(v, v)); }

struct Quaternion {
  double w = 0, x = 0, y = 0, z = 0;

  Quaternion() = default;
  Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}

  static Quaternion identity() { return {1, 0, 0, 0}; }
  static Quaternion vector(const Vec3& v) { return {0, v.x, v.y, v.z}; }

  Vec3 vec() const { return {x, y, z}; }
};

inline Quaternion operator+(const Quaternion& a, const Quaternion& b) {
  return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
}
inline Quaternion operator-(const Quaternion& a, const Quaternion& b) {
  return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
}
inline Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
inline Quaternion operator*(double s, const Quaternion& q) {
  return {s * q.w, s * q.x, s * q.y, s * q.z};
}

// Hamilton product, i*j = k.
inline Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

inline Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

// q * conj(q); squared magnitude.
inline double norm(const Quaternion& q) { return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z; }
inline double magnitude(const Quaternion& q) { return std::sqrt(norm(q)); }
inline double dot4(const Quaternion& a, const Quaternion& b) {
  return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

struct DualNumber {
  double re = 0, du = 0;
};

inline DualNumber operator*(const DualNumber& a, const DualNumber& b) {
  return {a.re * b.re, a.re * b.du + a.du * b.re};
}
inline DualNumber operator+(const DualNumber& a, const DualNumber& b) {
  return {a.re + b.re, a.du + b.du};
}

// h = p + eps * d, coordinates (h0..h3 | h4..h7) in the order w,x,y,z.
struct DualQuaternion {
  Quaternion p, d;

  DualQuaternion() = default;
  DualQuaternion(const Quaternion& primal, const Quaternion& dual) : p(primal), d(dual) {}

  static DualQuaternion identity() { return {Quaternion::identity(), {}}; }
  static DualQuaternion real(double s) { return {{s, 0, 0, 0}, {}}; }
  static DualQuaternion from8(const std::array<double, 8>& c) {
    return {{c[0], c[1], c[2], c[3]}, {c[4], c[5], c[6], c[7]}};
  }

  std::array<double, 8> to8() const { return {p.w, p.x, p.y, p.z, d.w, d.x, d.y, d.z}; }
};

inline DualQuaternion operator+(const DualQuaternion& a, const DualQuaternion& b) {
  return {a.p + b.p, a.d + b.d};
}
inline DualQuaternion operator-(const DualQuaternion& a, const DualQuaternion& b) {
  return {a.p - b.p, a.d - b.d};
}
inline DualQuaternion operator-(const DualQuaternion& a) { return {-a.p, -a.d}; }
inline DualQuaternion operator*(double s, const DualQuaternion& h) { return {s * h.p, s * h.d}; }

// eps^2 = 0: the dual part of a product sees only the cross terms.
inline DualQuaternion operator*(const DualQuaternion& a, const DualQuaternion& b) {
  return {a.p * b.p, a.p * b.d + a.d * b.p};
}

inline DualQuaternion conj(const DualQuaternion& h) { return {conj(h.p), conj(h.d)}; }

// h * conj(h) = p conj(p) + eps (p conj(d) + d conj(p)); always a dual number.
inline DualNumber dnorm(const DualQuaternion& h) { return {norm(h.p), 2.0 * dot4(h.p, h.d)}; }

// Euclidean magnitude of the 8 coordinates; the reference scale for
// tolerance checks on dual quaternions.
inline double mag8(const DualQuaternion& h) { return std::sqrt(norm(h.p) + norm(h.d)); }

// h^{-1} = (h conj(h))^{-1} conj(h). Throws NotInvertible when the primal
// part vanishes (h lies in the exceptional set {eps d}).
DualQuaternion inverse(const DualQuaternion& h);

// Scalar part of the Study quadric form, p conj(d) + d conj(p) = 2 dot4(p,d).
inline double study_defect(const DualQuaternion& h) { return 2.0 * dot4(h.p, h.d); }

// Representative with unit 8-coordinate norm and the first significant
// coordinate (order h0..h7) positive. For equality reporting and output
// only, never inside arithmetic.
DualQuaternion canonicalized(const DualQuaternion& h);

// Max coordinate difference of the canonical representatives.
double projective_distance(const DualQuaternion& a, const DualQuaternion& b);
bool projectively_equal(const DualQuaternion& a, const DualQuaternion& b, double tol);

enum class GeneratorKind { Rotation, Translation, Invalid };

// A linear motion polynomial t - h parameterizes rotations about a fixed
// axis when h + conj(h) and h conj(h) are both real and the primal vector
// part is nonzero; translations in direction (h5,h6,h7) when additionally
// h1 = h2 = h3 = 0.
GeneratorKind classify_generator(const DualQuaternion& h);

struct Line {
  Vec3 direction, moment;

  // Validates direction != 0 and the Pluecker condition dot(direction,
  // moment) = 0 within tolerance.
  static Line make(const Vec3& direction, const Vec3& moment);

  // Unit direction, first significant direction coordinate positive.
  Line canonical() const;
};

bool same_line(const Line& a, const Line& b, double tol);

// Fixed axis of a rotation generator: Pluecker coordinates
// [h1,h2,h3,-h5,-h6,-h7]. Throws NotARotation.
Line axis_of(const DualQuaternion& h);

// Rotation angle of t - h at parameter t: tan(phi/2) = (t - h0) / |vec(p)|.
// Throws NotARotation.
double rotation_angle(const DualQuaternion& h, double t);

// Displacement action (p x conj(p) + 2 p conj(d)) / (p conj(p)) on an affine
// point. Throws NotADisplacement when the Study condition fails or the
// primal part vanishes.
Vec3 act_on_point(const DualQuaternion& h, const Vec3& x);

}  // namespace motfact
