#include "motfact/algebra.hpp"

#include <algorithm>
#include <atomic>

namespace motfact {

namespace {
std::atomic<double> g_tolerance{1e-9};
}

double tolerance() { return g_tolerance.load(std::memory_order_relaxed); }

void set_tolerance(double tol) {
  if (!(tol > 0)) throw Error(Err::InvalidInput, "tolerance must be positive");
  g_tolerance.store(tol, std::memory_order_relaxed);
}

DualQuaternion inverse(const DualQuaternion& h) {
  const DualNumber n = dnorm(h);
  const double scale = norm(h.p) + norm(h.d);
  if (n.re <= tolerance() * tolerance() * scale || n.re == 0.0)
    throw Error(Err::NotInvertible, "primal part vanishes; no multiplicative inverse");
  // (r + eps du)^{-1} = 1/r - eps du/r^2, applied to conj(h).
  const double inv_re = 1.0 / n.re;
  const Quaternion pc = conj(h.p);
  const Quaternion dc = conj(h.d);
  return {inv_re * pc, inv_re * dc - (n.du * inv_re * inv_re) * pc};
}

DualQuaternion canonicalized(const DualQuaternion& h) {
  const auto c = h.to8();
  double maxabs = 0;
  for (double v : c) maxabs = std::max(maxabs, std::abs(v));
  if (maxabs == 0) return h;
  double sign = 1.0;
  for (double v : c) {
    if (std::abs(v) > tolerance() * maxabs) {
      sign = v < 0 ? -1.0 : 1.0;
      break;
    }
  }
  return (sign / mag8(h)) * h;
}

double projective_distance(const DualQuaternion& a, const DualQuaternion& b) {
  const auto ca = canonicalized(a).to8();
  const auto cb = canonicalized(b).to8();
  double d = 0;
  for (int i = 0; i < 8; ++i) d = std::max(d, std::abs(ca[i] - cb[i]));
  return d;
}

bool projectively_equal(const DualQuaternion& a, const DualQuaternion& b, double tol) {
  return projective_distance(a, b) <= tol;
}

GeneratorKind classify_generator(const DualQuaternion& h) {
  const double m = mag8(h);
  if (m == 0) return GeneratorKind::Invalid;
  const double tol = tolerance();
  // h + conj(h) real  <=>  dual scalar h4 = 0.
  if (std::abs(h.d.w) > tol * (1.0 + m)) return GeneratorKind::Invalid;
  // h conj(h) real  <=>  Study condition dot4(p, d) = 0.
  if (std::abs(dot4(h.p, h.d)) > tol * (1.0 + m * m)) return GeneratorKind::Invalid;
  const double vec_mag = length(h.p.vec());
  if (vec_mag > tol * (1.0 + m)) return GeneratorKind::Rotation;
  return GeneratorKind::Translation;
}

Line Line::make(const Vec3& direction, const Vec3& moment) {
  const double dmag = length(direction);
  const double mmag = length(moment);
  if (dmag == 0) throw Error(Err::InvalidInput, "line direction must be nonzero");
  if (std::abs(dot(direction, moment)) > tolerance() * (1.0 + dmag * mmag + dmag * dmag))
    throw Error(Err::InvalidInput, "Pluecker condition violated: dot(direction, moment) != 0");
  return Line{direction, moment};
}

Line Line::canonical() const {
  const double dmag = length(direction);
  double sign = 1.0;
  const double comps[3] = {direction.x, direction.y, direction.z};
  for (double v : comps) {
    if (std::abs(v) > tolerance() * dmag) {
      sign = v < 0 ? -1.0 : 1.0;
      break;
    }
  }
  const double s = sign / dmag;
  return Line{s * direction, s * moment};
}

bool same_line(const Line& a, const Line& b, double tol) {
  const Line ca = a.canonical();
  const Line cb = b.canonical();
  const Vec3 dd = ca.direction - cb.direction;
  const Vec3 dm = ca.moment - cb.moment;
  const double scale = 1.0 + std::max(length(ca.moment), length(cb.moment));
  return length(dd) <= tol * scale && length(dm) <= tol * scale;
}

Line axis_of(const DualQuaternion& h) {
  if (classify_generator(h) != GeneratorKind::Rotation)
    throw Error(Err::NotARotation, "axis_of requires a rotation generator");
  return Line{h.p.vec(), -h.d.vec()};
}

double rotation_angle(const DualQuaternion& h, double t) {
  if (classify_generator(h) != GeneratorKind::Rotation)
    throw Error(Err::NotARotation, "rotation_angle requires a rotation generator");
  return 2.0 * std::atan((t - h.p.w) / length(h.p.vec()));
}

Vec3 act_on_point(const DualQuaternion& h, const Vec3& x) {
  const double m = mag8(h);
  const double pn = norm(h.p);
  if (pn <= tolerance() * (1.0 + m * m))
    throw Error(Err::NotADisplacement, "primal part vanishes (exceptional three-space)");
  if (std::abs(study_defect(h)) > tolerance() * (1.0 + m * m))
    throw Error(Err::NotADisplacement, "Study condition violated");
  const Quaternion y = h.p * Quaternion::vector(x) * conj(h.p) + 2.0 * (h.p * conj(h.d));
  return (1.0 / pn) * y.vec();
}

}  // namespace motfact
