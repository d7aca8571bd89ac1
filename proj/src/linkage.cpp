#include "motfact/linkage.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace motfact {

void validate_linkage(const Linkage& l) {
  const int n = static_cast<int>(l.joints.size());
  if (n == 0) throw Error(Err::InvalidInput, "linkage has no joints");

  for (const auto& loop : l.loops) {
    if (loop.empty()) throw Error(Err::InvalidLoop, "empty loop");
    for (const auto& e : loop)
      if (e.joint < 0 || e.joint >= n)
        throw Error(Err::InvalidLoop, "loop references joint " + std::to_string(e.joint));
  }

  std::vector<int> membership(static_cast<size_t>(n), 0);
  for (const auto& link : l.links) {
    for (int j : link) {
      if (j < 0 || j >= n)
        throw Error(Err::InvalidInput, "link references joint " + std::to_string(j));
      ++membership[static_cast<size_t>(j)];
    }
  }
  for (int j = 0; j < n; ++j) {
    if (membership[static_cast<size_t>(j)] != 2)
      throw Error(Err::InvalidInput, "joint " + std::to_string(j) + " belongs to " +
                                         std::to_string(membership[static_cast<size_t>(j)]) +
                                         " links, expected 2");
  }

  // Connectivity of the link graph (links are nodes, joints are edges).
  if (!l.links.empty()) {
    std::vector<int> owner(static_cast<size_t>(n), -1);
    std::vector<std::vector<int>> adj(l.links.size());
    for (size_t li = 0; li < l.links.size(); ++li) {
      for (int j : l.links[li]) {
        if (owner[static_cast<size_t>(j)] >= 0) {
          adj[li].push_back(owner[static_cast<size_t>(j)]);
          adj[static_cast<size_t>(owner[static_cast<size_t>(j)])].push_back(static_cast<int>(li));
        } else {
          owner[static_cast<size_t>(j)] = static_cast<int>(li);
        }
      }
    }
    std::vector<bool> seen(l.links.size(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : adj[static_cast<size_t>(v)]) {
        if (!seen[static_cast<size_t>(w)]) {
          seen[static_cast<size_t>(w)] = true;
          stack.push_back(w);
        }
      }
    }
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
      throw Error(Err::InvalidInput, "link graph is not connected");
  }
}

Joint make_joint(const DualQuaternion& generator, const std::string& label) {
  const GeneratorKind kind = classify_generator(generator);
  if (kind == GeneratorKind::Invalid)
    throw Error(Err::InvalidInput, "joint generator '" + label + "' is neither a rotation nor a translation");
  return Joint{kind == GeneratorKind::Rotation ? JointKind::Revolute : JointKind::Prismatic,
               generator, label};
}

std::vector<double> standard_sweep() {
  std::vector<double> ts;
  for (int k = -2; k <= 2; ++k) {
    const double v = std::pow(10.0, k);
    ts.push_back(v);
    ts.push_back(-v);
  }
  ts.push_back(0.0);
  ts.push_back(std::numeric_limits<double>::infinity());
  return ts;
}

namespace {

double nonscalar_defect(const DualQuaternion& v) {
  double d = 0;
  const auto c = v.to8();
  for (int i = 1; i < 8; ++i) d = std::max(d, std::abs(c[static_cast<size_t>(i)]));
  return d;
}

}  // namespace

double loop_residual(const Linkage& l, const std::vector<LoopEntry>& loop,
                     const std::vector<double>& ts) {
  if (loop.empty()) throw Error(Err::InvalidLoop, "empty loop");
  for (const auto& e : loop)
    if (e.joint < 0 || e.joint >= static_cast<int>(l.joints.size()))
      throw Error(Err::InvalidLoop, "loop references joint " + std::to_string(e.joint));

  double worst = 0;
  for (double t : ts) {
    DualQuaternion v = DualQuaternion::identity();
    if (std::isinf(t)) {
      // Every factor is monic; the product polynomial evaluates to its
      // leading coefficient 1 at infinity.
    } else {
      for (const auto& e : loop) {
        const DualQuaternion& g = l.joints[static_cast<size_t>(e.joint)].generator;
        const DualQuaternion factor =
            DualQuaternion::real(t) - (e.conjugate ? conj(g) : g);
        v = v * factor;
      }
    }
    const double scalar = std::abs(v.p.w);
    if (scalar == 0.0) return std::numeric_limits<double>::infinity();
    worst = std::max(worst, nonscalar_defect(v) / scalar);
  }
  return worst;
}

double loop_residual(const Linkage& l, size_t loop_index, const std::vector<double>& ts) {
  if (loop_index >= l.loops.size()) throw Error(Err::InvalidLoop, "loop index out of range");
  return loop_residual(l, l.loops[loop_index], ts);
}

double max_loop_residual(const Linkage& l, const std::vector<double>& ts) {
  double worst = 0;
  for (const auto& loop : l.loops) worst = std::max(worst, loop_residual(l, loop, ts));
  return worst;
}

DHParams dh_from_axes(const Line& l1, const Line& l2) {
  const Line a = l1.canonical();
  const Line b = l2.canonical();
  const Vec3 u1 = a.direction, u2 = b.direction;
  // Point on each line closest to the origin.
  const Vec3 p1 = cross(u1, a.moment);
  const Vec3 p2 = cross(u2, b.moment);
  const Vec3 n = cross(u1, u2);
  const double sin_a = length(n);
  const double cos_a = dot(u1, u2);
  const Vec3 r = p2 - p1;

  DHParams dh;
  if (sin_a <= tolerance() * 10.0) {
    // Parallel (or anti-parallel) axes.
    const Vec3 perp = r - dot(r, u1) * u1;
    dh.distance = length(perp);
    dh.twist = cos_a >= 0 ? 0.0 : std::acos(-1.0);
    dh.offset1 = dh.offset2 = 0.0;
    const double scale = 1.0 + length(p1) + length(p2);
    if (dh.distance <= tolerance() * 10.0 * scale && cos_a >= 0)
      throw Error(Err::IdenticalAxes, "axes coincide");
    return dh;
  }

  dh.twist = std::atan2(sin_a, cos_a);
  const Vec3 nn = (1.0 / sin_a) * n;
  dh.distance = std::abs(dot(r, nn));
  // Feet of the common normal along each axis.
  const double d1 = dot(r, u1), d2 = dot(r, u2);
  const double denom = sin_a * sin_a;
  dh.offset1 = (d1 - cos_a * d2) / denom;
  dh.offset2 = (cos_a * d1 - d2) / denom;
  return dh;
}

std::vector<Vec3> trajectory(const MotionPolynomial& c, const Vec3& x,
                             const std::vector<double>& ts) {
  std::vector<Vec3> out;
  out.reserve(ts.size());
  for (double t : ts) {
    DualQuaternion v;
    double scale = 0;
    if (std::isinf(t)) {
      v = c.eval_at_infinity();
      scale = mag8(v);
    } else {
      v = c.eval(t);
      double tp = 1;
      for (int i = 0; i <= c.degree(); ++i) {
        scale += mag8(c.coeff(i)) * tp;
        tp *= std::abs(t);
      }
    }
    if (magnitude(v.p) <= tolerance() * (1.0 + scale))
      throw PoleAtParameterError(t, "primal part vanishes at sample parameter");
    out.push_back(act_on_point(v, x));
  }
  return out;
}

}  // namespace motfact
