#include <doctest.h>

#include <random>

#include "motfact/algebra.hpp"
#include "support.hpp"

using namespace motfact;
using testsupport::dq;
using testsupport::quat;

namespace {

bool quat_eq(const Quaternion& a, const Quaternion& b, double tol = 1e-12) {
  return magnitude(a - b) <= tol;
}

bool dq_eq(const DualQuaternion& a, const DualQuaternion& b, double tol = 1e-12) {
  return mag8(a - b) <= tol;
}

Quaternion random_quat(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  return {u(rng), u(rng), u(rng), u(rng)};
}

DualQuaternion random_dq(std::mt19937_64& rng) {
  return {random_quat(rng), random_quat(rng)};
}

}  // namespace

TEST_CASE("quaternion product is non-commutative in the right way") {
  const Quaternion i{0, 1, 0, 0}, j{0, 0, 1, 0}, k{0, 0, 0, 1};
  CHECK(quat_eq((i + j) * (quat(2, 0, 0, 0) - k), quat(0, 1, 3, 0)));
  CHECK(quat_eq((quat(2, 0, 0, 0) - k) * (i + j), quat(0, 3, 1, 0)));

  std::mt19937_64 rng(7);
  for (int n = 0; n < 20; ++n) {
    const Quaternion q = random_quat(rng);
    CHECK(quat_eq(Quaternion::identity() * q, q));
    CHECK(quat_eq(q * Quaternion::identity(), q));
  }
}

TEST_CASE("quaternion product is associative and norm-multiplicative") {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 50; ++n) {
    const Quaternion a = random_quat(rng), b = random_quat(rng), c = random_quat(rng);
    CHECK(quat_eq((a * b) * c, a * (b * c), 1e-13));
    CHECK(norm(a * b) == doctest::Approx(norm(a) * norm(b)).epsilon(1e-12));
  }
}

TEST_CASE("dual quaternion product respects eps^2 = 0") {
  const DualQuaternion lhs = dq(0, 1, 0, 0, 0, 0, 1, 0);  // i + eps j
  const DualQuaternion rhs = dq(0, 0, 1, 0, 0, 0, 0, -1); // j - eps k
  CHECK(dq_eq(lhs * rhs, dq(0, 0, 0, 1, -1, 0, 1, 0)));   // k - eps(1 - j)

  CHECK(dq_eq(dq(0, 0, 0, 0, 0, 0, 1, 0) * dq(0, 0, 0, 0, 0, 0, 0, 1), DualQuaternion{}));
  CHECK(dq_eq(dq(1, 0, 0, 0, 0, 1, 0, 0) * dq(1, 0, 0, 0, 0, -1, 0, 0),
              DualQuaternion::identity()));
}

TEST_CASE("dual quaternion norm is a dual number") {
  CHECK(dnorm(dq(0, 0, 0, 1)).re == doctest::Approx(1.0));
  CHECK(dnorm(dq(0, 0, 0, 1)).du == doctest::Approx(0.0));

  const DualNumber n1 = dnorm(dq(0, 1, 0, 0, 0, 0, 1, 0));  // i + eps j
  CHECK(n1.re == doctest::Approx(1.0));
  CHECK(n1.du == doctest::Approx(0.0));

  const DualNumber n2 = dnorm(dq(2, 0, 0, 0, 0, 1, 0, 0));  // 2 + eps i
  CHECK(n2.re == doctest::Approx(4.0));
  CHECK(n2.du == doctest::Approx(0.0));
}

TEST_CASE("norm multiplicativity and conjugation anti-automorphism") {
  std::mt19937_64 rng(13);
  for (int n = 0; n < 100; ++n) {
    const DualQuaternion a = random_dq(rng), b = random_dq(rng);
    const DualNumber nab = dnorm(a * b);
    const DualNumber prod = dnorm(a) * dnorm(b);
    const double scale = std::abs(prod.re) + std::abs(prod.du) + 1.0;
    CHECK(std::abs(nab.re - prod.re) <= 1e-12 * scale);
    CHECK(std::abs(nab.du - prod.du) <= 1e-12 * scale);
    CHECK(dq_eq(conj(a * b), conj(b) * conj(a), 1e-12 * (1 + mag8(a) * mag8(b))));
  }
}

TEST_CASE("inverse") {
  CHECK(dq_eq(inverse(dq(2, 0, 0, 0)), dq(0.5, 0, 0, 0)));
  CHECK(dq_eq(inverse(dq(0, 0, 0, 1)), dq(0, 0, 0, -1)));
  CHECK_THROWS_WITH_AS(inverse(dq(0, 0, 0, 0, 0, 1, 0, 0)), doctest::Contains("inverse"),
                       Error);

  std::mt19937_64 rng(17);
  for (int n = 0; n < 100; ++n) {
    DualQuaternion h = random_dq(rng);
    if (magnitude(h.p) < 0.1) continue;
    CHECK(dq_eq(h * inverse(h), DualQuaternion::identity(), 1e-10));
    CHECK(dq_eq(inverse(h) * h, DualQuaternion::identity(), 1e-10));
  }
}

TEST_CASE("act_on_point") {
  const Vec3 x{0.3, -0.2, 0.9};
  const Vec3 y = act_on_point(DualQuaternion::identity(), x);
  CHECK(length(y - x) <= 1e-15);

  // Half turn about the z axis.
  const Vec3 hx = act_on_point(dq(0, 0, 0, 1), Vec3{1, 0, 0});
  CHECK(length(hx - Vec3{-1, 0, 0}) <= 1e-15);

  // Unit translation along x: 1 - eps i/2 moves the origin to (1,0,0).
  const Vec3 tr = act_on_point(dq(1, 0, 0, 0, 0, -0.5, 0, 0), Vec3{0, 0, 0});
  CHECK(length(tr - Vec3{1, 0, 0}) <= 1e-15);

  CHECK_THROWS_AS(act_on_point(dq(1, 0, 0, 0, 1, 0, 0, 0), x), Error);  // Study violated
  CHECK_THROWS_AS(act_on_point(dq(0, 0, 0, 0, 0, 1, 0, 0), x), Error);  // primal zero
}

TEST_CASE("act_on_point is rigid and projectively invariant") {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int n = 0; n < 50; ++n) {
    // Random displacement through the Study projection.
    Quaternion p = random_quat(rng);
    if (magnitude(p) < 0.3) continue;
    Quaternion d = random_quat(rng);
    d = d - (dot4(p, d) / dot4(p, p)) * p;
    const DualQuaternion h{p, d};

    const Vec3 a{u(rng), u(rng), u(rng)}, b{u(rng), u(rng), u(rng)}, c{u(rng), u(rng), u(rng)};
    const Vec3 ya = act_on_point(h, a), yb = act_on_point(h, b), yc = act_on_point(h, c);
    CHECK(length(ya - yb) == doctest::Approx(length(a - b)).epsilon(1e-9));
    CHECK(length(yb - yc) == doctest::Approx(length(b - c)).epsilon(1e-9));
    CHECK(length(ya - yc) == doctest::Approx(length(a - c)).epsilon(1e-9));

    const double lambda = u(rng);
    if (std::abs(lambda) < 0.1) continue;
    CHECK(length(act_on_point(lambda * h, a) - ya) <= 1e-10 * (1 + length(ya)));
  }
}

TEST_CASE("classify_generator") {
  CHECK(classify_generator(dq(0, 0, 0, 1, 0, 0, -5, 0)) == GeneratorKind::Rotation);
  CHECK(classify_generator(dq(1, 0, 0, 0, 0, 1, 3, -1)) == GeneratorKind::Translation);
  CHECK(classify_generator(dq(1, 0, 0, 0, 1, 0, 0, 0)) == GeneratorKind::Invalid);
  // Study condition violated: vector parts not orthogonal.
  CHECK(classify_generator(dq(0, 1, 0, 0, 0, 1, 0, 0)) == GeneratorKind::Invalid);
}

TEST_CASE("axis_of") {
  const Line zaxis = axis_of(dq(0, 0, 0, 1));
  CHECK(length(zaxis.direction - Vec3{0, 0, 1}) <= 1e-15);
  CHECK(length(zaxis.moment) <= 1e-15);

  // h2 of the Bennett example: -1 - k - 2 eps j.
  const Line l = axis_of(testsupport::bennett_example::h2());
  CHECK(length(l.direction - Vec3{0, 0, -1}) <= 1e-15);
  CHECK(length(l.moment - Vec3{0, 2, 0}) <= 1e-15);

  // Sign flip gives the same canonical line.
  const DualQuaternion h = testsupport::bennett_example::h2();
  CHECK(same_line(axis_of(h), axis_of(-1.0 * h), 1e-12));

  CHECK_THROWS_AS(axis_of(dq(1, 0, 0, 0, 0, 1, 0, 0)), Error);  // translation
}

TEST_CASE("rotation_angle agrees with the norm polynomial form") {
  CHECK(rotation_angle(dq(0, 0, 0, 1), 1.0) == doctest::Approx(std::acos(-1.0) / 2));
  CHECK(rotation_angle(dq(0, 0, 0, 1), 0.0) == doctest::Approx(0.0));

  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int n = 0; n < 100; ++n) {
    Quaternion p = random_quat(rng);
    if (length(p.vec()) < 0.2) continue;
    Vec3 m{u(rng), u(rng), u(rng)};
    m = m - (dot(m, p.vec()) / dot(p.vec(), p.vec())) * p.vec();
    const DualQuaternion h{p, Quaternion::vector(m)};
    REQUIRE(classify_generator(h) == GeneratorKind::Rotation);

    const double t = u(rng);
    const double a = -2.0 * h.p.w;
    const double b = dnorm(h).re;
    const double via_norm = 2.0 * std::atan((2 * t + a) / std::sqrt(4 * b - a * a));
    CHECK(rotation_angle(h, t) == doctest::Approx(via_norm).epsilon(1e-10));
  }
}

TEST_CASE("canonical representatives") {
  const DualQuaternion h = dq(0, -2, 1, 0, 0, 0, 3, 0);
  const DualQuaternion c1 = canonicalized(h);
  const DualQuaternion c2 = canonicalized(-2.5 * h);
  CHECK(mag8(c1 - c2) <= 1e-14);
  CHECK(std::abs(mag8(c1) - 1.0) <= 1e-14);
  CHECK(c1.p.x > 0);  // first significant coordinate positive
  CHECK(projectively_equal(h, -3.0 * h, 1e-12));
}
