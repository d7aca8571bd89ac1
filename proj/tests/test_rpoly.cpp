#include <doctest.h>

#include <random>

#include "motfact/rpoly.hpp"
#include "support.hpp"

using namespace motfact;
using testsupport::quat;

TEST_CASE("quadratic_factorization splits the Bennett norm") {
  const RealPoly n{4, 4, 4, 2, 1};  // t^4 + 2t^3 + 4t^2 + 4t + 4
  const auto ms = quadratic_factorization(n);
  REQUIRE(ms.size() == 2);
  CHECK(ms[0].a == doctest::Approx(0.0));
  CHECK(ms[0].b == doctest::Approx(2.0));
  CHECK(ms[1].a == doctest::Approx(2.0));
  CHECK(ms[1].b == doctest::Approx(2.0));
}

TEST_CASE("quadratic_factorization handles perfect squares") {
  const RealPoly n{1, 0, 2, 0, 1};  // (t^2 + 1)^2
  const auto ms = quadratic_factorization(n);
  REQUIRE(ms.size() == 2);
  for (const auto& m : ms) {
    CHECK(m.a == doctest::Approx(0.0));
    CHECK(m.b == doctest::Approx(1.0));
  }
}

TEST_CASE("quadratic_factorization rejects real roots and odd degrees") {
  CHECK_THROWS_AS(quadratic_factorization(RealPoly{-1, 0, 1}), RealRootFoundError);
  try {
    quadratic_factorization(RealPoly{-1, 0, 1});
  } catch (const RealRootFoundError& e) {
    CHECK(std::abs(std::abs(e.root()) - 1.0) <= 1e-9);
  }
  CHECK_THROWS_AS(quadratic_factorization(RealPoly{1, 1, 1, 1}), Error);
}

TEST_CASE("quadratic_factorization reconstructs random inputs") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    RealPoly prod = RealPoly::constant(1.5);
    std::vector<QuadraticFactor> expect;
    for (int i = 0; i < n; ++i) {
      const double a = u(rng);
      const double b = a * a / 4 + 0.1 + std::abs(u(rng));  // irreducible
      expect.push_back({a, b});
      prod = prod * RealPoly{b, a, 1};
    }
    const auto ms = quadratic_factorization(prod);
    REQUIRE(ms.size() == static_cast<size_t>(n));
    RealPoly back = RealPoly::constant(prod.leading());
    for (const auto& m : ms) {
      CHECK(m.a * m.a - 4 * m.b < tolerance());
      back = back * m.poly();
    }
    const RealPoly diff = back - prod;
    CHECK(diff.max_abs() <= 1e-8 * (1 + prod.max_abs()));
  }
}

TEST_CASE("greatest_real_factor") {
  // Primal part of the Bennett interpolant: t^2 + (1-j)t + (1-i-j-k).
  const std::vector<Quaternion> bennett = {quat(1, -1, -1, -1), quat(1, 0, -1, 0),
                                           quat(1, 0, 0, 0)};
  CHECK(greatest_real_factor(bennett).degree() == 0);

  // A real polynomial is its own real factor.
  const std::vector<Quaternion> real_poly = {quat(1, 0, 0, 0), quat(0, 0, 0, 0), quat(1, 0, 0, 0)};
  const RealPoly g = greatest_real_factor(real_poly);
  REQUIRE(g.degree() == 2);
  CHECK(g[0] == doctest::Approx(1.0));
  CHECK(g[1] == doctest::Approx(0.0));
  CHECK(g[2] == doctest::Approx(1.0));

  // (t^2 + 1)(t - k): the common factor is recovered by the coordinate gcd.
  const std::vector<Quaternion> mixed = {quat(0, 0, 0, -1), quat(1, 0, 0, 0), quat(0, 0, 0, -1),
                                         quat(1, 0, 0, 0)};
  const RealPoly gm = greatest_real_factor(mixed);
  REQUIRE(gm.degree() == 2);
  CHECK(gm[0] == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(gm[1] == doctest::Approx(0.0));
  CHECK(gm[2] == doctest::Approx(1.0));
}

TEST_CASE("greatest_real_factor divides every coordinate") {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 25; ++trial) {
    // Random quaternion polynomial times a random real quadratic.
    const RealPoly real_factor{u(rng), u(rng), 1.0};
    std::vector<Quaternion> q(3);
    for (auto& c : q) c = quat(u(rng), u(rng), u(rng), u(rng));

    std::vector<Quaternion> prod(q.size() + 2, Quaternion{});
    for (size_t i = 0; i < q.size(); ++i)
      for (int j = 0; j <= 2; ++j)
        prod[i + static_cast<size_t>(j)] = prod[i + static_cast<size_t>(j)] + real_factor[j] * q[i];

    const RealPoly g = greatest_real_factor(prod);
    CHECK(g.degree() >= 2);

    // Every coordinate polynomial is divisible by g.
    for (int coord = 0; coord < 4; ++coord) {
      std::vector<double> c(prod.size());
      for (size_t i = 0; i < prod.size(); ++i) {
        const Quaternion& v = prod[i];
        c[i] = coord == 0 ? v.w : coord == 1 ? v.x : coord == 2 ? v.y : v.z;
      }
      const RealPoly coeffs(c);
      if (coeffs.is_zero()) continue;
      const RealPoly rem = divmod(coeffs, g).remainder;
      CHECK(rem.max_abs() <= 1e-7 * (1 + coeffs.max_abs()));
    }
  }
}

TEST_CASE("repeated_quadratic") {
  // Norm of the line-symmetric motion at a=b=1, c=2 is 25(t^2+1)^2.
  const RealPoly sq = 25.0 * (RealPoly{1, 0, 1} * RealPoly{1, 0, 1});
  const RealPoly rep = repeated_quadratic(sq);
  REQUIRE(rep.degree() == 2);
  CHECK(rep[0] == doctest::Approx(1.0));
  CHECK(rep[2] == doctest::Approx(1.0));

  CHECK(repeated_quadratic(RealPoly{4, 4, 4, 2, 1}).degree() == 0);

  const RealPoly sq2 = RealPoly{2, 0, 1} * RealPoly{2, 0, 1};
  const RealPoly rep2 = repeated_quadratic(sq2);
  REQUIRE(rep2.degree() == 2);
  CHECK(rep2[0] == doctest::Approx(2.0));
}

TEST_CASE("divmod identity") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> ac(1 + rng() % 7), bc(1 + rng() % 5);
    for (auto& v : ac) v = u(rng);
    for (auto& v : bc) v = u(rng);
    const RealPoly a(ac), b(bc);
    if (b.is_zero()) continue;
    const auto [q, r] = divmod(a, b);
    CHECK(r.degree() < std::max(b.degree(), 1));
    const RealPoly back = q * b + r;
    CHECK((back - a).max_abs() <= 1e-10 * (1 + a.max_abs() + q.max_abs() * b.max_abs()));
  }
}

TEST_CASE("quartic discriminant") {
  // (t^2+2)(t^2+2t+2) has discriminant 2048; repeated quadratics give 0.
  CHECK(quartic_discriminant(RealPoly{4, 4, 4, 2, 1}) == doctest::Approx(2048.0));
  CHECK(quartic_discriminant(RealPoly{1, 0, 2, 0, 1}) == doctest::Approx(0.0));
}
