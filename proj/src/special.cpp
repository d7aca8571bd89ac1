#include "motfact/special.hpp"

#include <algorithm>
#include <cmath>

namespace motfact {

namespace {

QuadraticFactor norm_quadratic(const DualQuaternion& h) {
  return {-2.0 * h.p.w, dnorm(h).re};
}

constexpr QuadraticFactor kUnitQuadratic{0.0, 1.0};  // t^2 + 1

}  // namespace

TranslationMotionSpec TranslationMotionSpec::make(double a, double b) {
  if (!(b > 0) || !(a >= b))
    throw Error(Err::InvalidInput, "translation spec requires a >= b > 0");
  return {a, b};
}

MotionPolynomial elliptic_translation(const TranslationMotionSpec& spec) {
  const DualQuaternion c0{{1, 0, 0, 0}, {0, spec.a, 0, 0}};
  const DualQuaternion c1{{0, 0, 0, 0}, {0, 0, spec.b, 0}};
  return MotionPolynomial::make({c0, c1, DualQuaternion::identity()});
}

std::pair<DualQuaternion, DualQuaternion> circular_translation_factors(double a, double lambda,
                                                                       double mu) {
  if (!(a > 0)) throw Error(Err::InvalidInput, "circular translation requires a > 0");
  const DualQuaternion h1{{0, 0, 0, 1}, {0, lambda, mu - a, 0}};
  const DualQuaternion h2{{0, 0, 0, -1}, {0, -lambda, -mu, 0}};
  return {h1, h2};
}

CircularFamily try_quadratic_factorization(const TranslationMotionSpec& spec) {
  // Comparing primal coefficients of C = (t-h1)(t-h2) forces h1 = -h2 to be
  // a unit vector quaternion (x,y,z); the dual comparison then pins x = 0
  // and z = a/b, so a unit solution exists only for a = b.
  const double z = spec.a / spec.b;
  if (z > 1.0 + tolerance())
    throw Error(Err::NoQuadraticFactorization,
                "factor direction would need z = a/b = " + std::to_string(z) +
                    " > 1: elliptic translations admit no quadratic factorization");
  return CircularFamily{0.0, 0.0, z};
}

Factorization multiplication_trick_planar(const TranslationMotionSpec& spec) {
  const double a = spec.a, b = spec.b;
  const double s = a + b, d = a - b;
  Factorization f;
  f.factors = {
      DualQuaternion{{0, 0, 0, 1}, {0, -d / s, 0, 0}},
      DualQuaternion{{0, 0, 0, -1}, {0, 2 * d / (2 * s), -(s * s) / (2 * s), 0}},
      DualQuaternion{{0, 0, 0, -1}, {0, -1, 0.5 * d, 0}},
      DualQuaternion{{0, 0, 0, 1}, {0, 1, 0, 0}},
  };
  f.norms.assign(4, kUnitQuadratic);
  return f;
}

Factorization multiplication_trick_spatial(const TranslationMotionSpec& spec) {
  const double a = spec.a, b = spec.b;
  const double p = a * a + b * b, m = a * a - b * b;
  const Quaternion u{0, m / p, 0, -2 * a * b / p};
  Factorization f;
  f.factors = {
      DualQuaternion{-u, {0, 0, -m / p, 0}},
      DualQuaternion{u, {0, 0, -(p * p - 2 * b * m) / (2 * b * p), 0}},
      DualQuaternion{{0, -1, 0, 0}, {0, 0, (m + 2 * b) / (2 * b), 0}},
      DualQuaternion{{0, 1, 0, 0}, {0, 0, -1, 0}},
  };
  f.norms.assign(4, kUnitQuadratic);
  return f;
}

MotionPolynomial darboux_motion(const TranslationMotionSpec& spec) {
  return right_multiply(elliptic_translation(spec), {Quaternion{0, 0, 0, -1}, Quaternion::identity()});
}

Factorization darboux_factors(const TranslationMotionSpec& spec, double lambda, double mu) {
  const double a = spec.a, b = spec.b;
  Factorization f;
  f.factors = {
      DualQuaternion{{0, 0, 0, -1}, {0, lambda, mu, 0}},
      DualQuaternion{{0, 0, 0, 1}, {0, -lambda, 0.5 * (a - b) - mu, 0}},
      DualQuaternion{{0, 0, 0, 1}, {0, 0, -0.5 * (a + b), 0}},
  };
  f.norms.assign(3, kUnitQuadratic);
  return f;
}

BracedChain brace_chain(const Factorization& factors, const DualQuaternion& m0) {
  const int n = static_cast<int>(factors.factors.size());
  if (n == 0) throw Error(Err::InvalidInput, "brace_chain needs at least one factor");
  if (classify_generator(m0) != GeneratorKind::Rotation)
    throw Error(Err::InvalidInput, "m0 must be a rotation generator");

  const QuadraticFactor nm = norm_quadratic(m0);

  BracedChain out;
  out.m.resize(static_cast<size_t>(n) + 1);
  out.k.resize(static_cast<size_t>(n));
  out.m[0] = m0;

  // w_i stands for m_i^{-1}; for rotation quaternions the projective inverse
  // is the conjugate.
  DualQuaternion w = conj(m0);
  for (int i = 0; i < n; ++i) {
    const DualQuaternion& h = factors.factors[static_cast<size_t>(i)];
    const QuadraticFactor nh = norm_quadratic(h);
    if (quadratic_close(nh, nm, 1e-9))
      throw Error(Err::BraceDegenerate,
                  "m0 shares a norm quadratic with factor " + std::to_string(i + 1));
    const MotionPolynomial cell = MotionPolynomial::linear(w) * MotionPolynomial::linear(h);
    Factorization flip;
    try {
      flip = factor_with_order(cell, {nh, nm});
    } catch (const Error& e) {
      if (e.code() == Err::NonGeneric || e.code() == Err::RemainderNotInvertible ||
          e.code() == Err::RealRootFound || e.code() == Err::ResidualTooLarge)
        throw Error(Err::BraceDegenerate,
                    "recursion step " + std::to_string(i + 1) + " failed: " + e.what());
      throw;
    }
    out.k[static_cast<size_t>(i)] = flip.factors[0];
    w = flip.factors[1];
    out.m[static_cast<size_t>(i) + 1] = conj(w);
  }

  // Joint layout: m_0..m_n, then h_1..h_n, then k_1..k_n.
  const auto idx_m = [](int i) { return i; };
  const auto idx_h = [n](int i) { return n + i; };          // i = 1..n
  const auto idx_k = [n](int i) { return 2 * n + i; };      // i = 1..n

  Linkage l;
  for (int i = 0; i <= n; ++i)
    l.joints.push_back(make_joint(out.m[static_cast<size_t>(i)], "m" + std::to_string(i)));
  for (int i = 1; i <= n; ++i)
    l.joints.push_back(make_joint(factors.factors[static_cast<size_t>(i - 1)], "h" + std::to_string(i)));
  for (int i = 1; i <= n; ++i)
    l.joints.push_back(make_joint(out.k[static_cast<size_t>(i - 1)], "k" + std::to_string(i)));

  // Link graph: the triplets (h_i, m_i, h_{i+1}) and (k_i, m_i, k_{i+1})
  // share a link; the chain starts at m_0 and ends at the terminal links
  // (h_n, m_n) and (m_n, k_n).
  l.links.push_back({idx_m(0), idx_h(1)});
  l.links.push_back({idx_m(0), idx_k(1)});
  for (int i = 1; i < n; ++i) {
    l.links.push_back({idx_h(i), idx_m(i), idx_h(i + 1)});
    l.links.push_back({idx_k(i), idx_m(i), idx_k(i + 1)});
  }
  l.links.push_back({idx_h(n), idx_m(n)});
  out.terminal_link = static_cast<int>(l.links.size()) - 1;
  l.links.push_back({idx_m(n), idx_k(n)});

  // One loop per cell: (t - m_{i-1}^{-1})(t - h_i)(t - m_i)(t - conj(k_i)).
  for (int i = 1; i <= n; ++i) {
    l.loops.push_back({{idx_m(i - 1), true},
                       {idx_h(i), false},
                       {idx_m(i), false},
                       {idx_k(i), true}});
  }

  // Cell geometry: planar when all four axes of every cell are parallel.
  bool planar = true;
  for (int i = 1; i <= n && planar; ++i) {
    const Vec3 dir = axis_of(out.m[static_cast<size_t>(i - 1)]).canonical().direction;
    const DualQuaternion axes[3] = {factors.factors[static_cast<size_t>(i - 1)],
                                    out.m[static_cast<size_t>(i)], out.k[static_cast<size_t>(i - 1)]};
    for (const auto& gq : axes) {
      const Vec3 d2 = axis_of(gq).canonical().direction;
      if (length(cross(dir, d2)) > 1e-7) planar = false;
    }
  }
  out.planar_cells = planar;
  l.type = planar ? "braced chain (anti-parallelogram cells)" : "braced chain (Bennett cells)";

  validate_linkage(l);
  out.linkage = std::move(l);
  out.max_cell_residual = max_loop_residual(out.linkage, standard_sweep());
  if (out.max_cell_residual > 1e-8)
    throw Error(Err::BraceDegenerate,
                "cell closure residual " + std::to_string(out.max_cell_residual));
  return out;
}

BracedChain brace_chain(const Factorization& factors, std::mt19937_64& rng, bool planar_m0,
                        int max_retries) {
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    const DualQuaternion m0 = planar_m0 ? random_planar_rotation(rng) : random_rotation(rng);
    try {
      return brace_chain(factors, m0);
    } catch (const Error& e) {
      if (e.code() != Err::BraceDegenerate) throw;
    }
  }
  throw Error(Err::BraceDegenerate,
              "no suitable m0 found after " + std::to_string(max_retries) + " attempts");
}

MotionPolynomial right_multiply(const MotionPolynomial& c, const std::vector<Quaternion>& h) {
  if (h.empty()) throw Error(Err::InvalidInput, "empty multiplier polynomial");
  double maxmag = 0;
  for (const auto& q : h) maxmag = std::max(maxmag, magnitude(q));
  if (magnitude(h.back()) <= tolerance() * maxmag)
    throw Error(Err::LeadingNotInvertible, "multiplier leading coefficient is zero");
  std::vector<DualQuaternion> hc(h.size());
  for (size_t i = 0; i < h.size(); ++i) hc[i] = DualQuaternion{h[i], {}};
  MotionPolynomial hp = MotionPolynomial::raw(std::move(hc));
  hp.validate();  // quaternion polynomials always satisfy the contract
  MotionPolynomial out = c * hp;
  if (!out.is_validated()) out.validate();
  return out;
}

}  // namespace motfact
