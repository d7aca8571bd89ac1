#include "motfact/bennett.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace motfact {

const char* diagnosis_name(DiagnosisKind k) {
  switch (k) {
    case DiagnosisKind::Bennett4R: return "Bennett4R";
    case DiagnosisKind::CoincidentDyads: return "CoincidentDyads";
    case DiagnosisKind::RPRP: return "RPRP";
    case DiagnosisKind::CurvilinearTranslation: return "CurvilinearTranslation";
    case DiagnosisKind::LineMotion: return "LineMotion";
    case DiagnosisKind::PlanarOrSphericalFamily: return "PlanarOrSphericalFamily";
    case DiagnosisKind::NoSolution: return "NoSolution";
  }
  return "Unknown";
}

Pose Pose::make(const DualQuaternion& h) {
  const double m = mag8(h);
  if (m == 0) throw Error(Err::InvalidInput, "zero dual quaternion is not a pose");
  if (magnitude(h.p) <= tolerance() * m)
    throw Error(Err::InvalidInput, "pose lies in the exceptional three-space (primal part 0)");
  if (std::abs(study_defect(h)) > tolerance() * m * m)
    throw Error(Err::InvalidInput, "pose violates the Study condition");
  return Pose{h};
}

namespace {

// Rank of the span of the three poses in P^7; rank <= 2 means the
// interpolating curve lies on a straight line (fixed-axis rotation or
// translation).
bool poses_span_line(const DualQuaternion& a, const DualQuaternion& b, const DualQuaternion& c) {
  Eigen::Matrix<double, 3, 8> m;
  const DualQuaternion rows[3] = {(1.0 / mag8(a)) * a, (1.0 / mag8(b)) * b, (1.0 / mag8(c)) * c};
  for (int i = 0; i < 3; ++i) {
    const auto v = rows[i].to8();
    for (int j = 0; j < 8; ++j) m(i, j) = v[static_cast<size_t>(j)];
  }
  Eigen::JacobiSVD<Eigen::Matrix<double, 3, 8>> svd(m);
  const auto& s = svd.singularValues();
  return s(2) <= 100.0 * tolerance() * s(0);
}

}  // namespace

Interpolation interpolate_poses(const Pose& p0, const Pose& p1, const Pose& p2) {
  const double tol = tolerance();
  if (projectively_equal(p0.value, p1.value, 10 * tol) ||
      projectively_equal(p0.value, p2.value, 10 * tol) ||
      projectively_equal(p1.value, p2.value, 10 * tol))
    throw Error(Err::InvalidInput, "poses must be pairwise distinct (projectively)");

  if (poses_span_line(p0.value, p1.value, p2.value))
    throw Error(Err::LineMotion,
                "poses lie on a line in P^7: fixed-axis rotation or translation");

  // Reduce to p2 = 1.
  const DualQuaternion u = inverse(p2.value);
  const DualQuaternion a = p0.value * u;
  const DualQuaternion b = p1.value * u;

  // With C = t^2 + (lambda b - 1 - mu a) t + mu a, the dual part of the norm
  // polynomial vanishes iff
  //   t^3:  lambda s1 - mu s0                 = 0
  //   t^2:  2 mu s0 - lambda s1 - lambda mu g = 0
  //   t^1:  mu (lambda g - s0)                = 0
  // where s0, s1 are the dual scalar parts and g the mixed Study form. The
  // t^0 equation vanishes because a satisfies the Study condition.
  const double s0 = a.d.w;
  const double s1 = b.d.w;
  const double g01 = dot4(a.p, b.d) + dot4(b.p, a.d);
  const double scale = (1.0 + mag8(a)) * (1.0 + mag8(b));

  const bool s0_zero = std::abs(s0) <= tol * scale;
  const bool s1_zero = std::abs(s1) <= tol * scale;
  const bool g_zero = std::abs(g01) <= tol * scale;

  double lambda = 0, mu = 0;
  if (g_zero) {
    if (s0_zero && s1_zero)
      throw Error(Err::FamilyOfSolutions,
                  "dual part of the norm vanishes identically: planar or spherical motion "
                  "admits a two-parametric set of interpolants");
    throw Error(Err::DegenerateZeroParameter,
                "only lambda = 0 or mu = 0 solve the interpolation conditions");
  }
  if (s0_zero || s1_zero)
    throw Error(Err::DegenerateZeroParameter,
                "only lambda = 0 or mu = 0 solve the interpolation conditions");

  lambda = s0 / g01;
  mu = s1 / g01;

  // Consistency of the middle equation.
  const double e2 = 2 * mu * s0 - lambda * s1 - lambda * mu * g01;
  if (std::abs(e2) > 1e3 * tol * scale * (1.0 + std::abs(lambda)) * (1.0 + std::abs(mu)))
    throw Error(Err::NoSolution, "interpolation system is inconsistent");

  const DualQuaternion c1 = lambda * b - DualQuaternion::identity() - mu * a;
  const DualQuaternion c0 = mu * a;
  MotionPolynomial c =
      MotionPolynomial::raw({c0, c1, DualQuaternion::identity()});
  // Compose the reduction back: C -> C * p2.
  c = c * p2.value;
  c.validate();
  return {c, lambda, mu};
}

namespace {

Linkage assemble_single_loop(const std::vector<DualQuaternion>& generators,
                             const std::vector<std::string>& labels, const std::string& type) {
  Linkage l;
  l.type = type;
  const int n = static_cast<int>(generators.size());
  for (int i = 0; i < n; ++i) l.joints.push_back(make_joint(generators[static_cast<size_t>(i)], labels[static_cast<size_t>(i)]));
  for (int i = 0; i < n; ++i) l.links.push_back({i, (i + 1) % n});
  std::vector<LoopEntry> loop;
  for (int i = 0; i < n; ++i) loop.push_back({i, false});
  l.loops.push_back(std::move(loop));
  return l;
}

SynthesisOutcome diagnose(DiagnosisKind kind, const std::string& detail) {
  SynthesisOutcome out;
  out.diagnosis = {kind, detail};
  return out;
}

}  // namespace

SynthesisOutcome synthesize_bennett(const Pose& p0, const Pose& p1, const Pose& p2) {
  Interpolation interp;
  try {
    interp = interpolate_poses(p0, p1, p2);
  } catch (const Error& e) {
    switch (e.code()) {
      case Err::LineMotion: return diagnose(DiagnosisKind::LineMotion, e.what());
      case Err::FamilyOfSolutions:
        return diagnose(DiagnosisKind::PlanarOrSphericalFamily, e.what());
      case Err::NoSolution:
      case Err::DegenerateZeroParameter:
        return diagnose(DiagnosisKind::NoSolution, e.what());
      default: throw;
    }
  }

  SynthesisOutcome out;
  out.motion = interp.c;
  out.lambda = interp.lambda;
  out.mu = interp.mu;

  const MotionPolynomial cm = make_monic(interp.c).poly;
  const RealPoly grf = greatest_real_factor(cm.primal());

  if (grf.degree() >= 2) {
    out.diagnosis = {DiagnosisKind::CurvilinearTranslation,
                     "primal part is real: curvilinear translation along a degree-2 curve"};
    return out;
  }

  if (grf.degree() == 1) {
    // Primal vanishes at the real root t0; the curve meets the exceptional
    // three-space there unless the dual part vanishes too.
    const double t0 = -grf[0];
    const auto dual = cm.dual();
    Quaternion qt0;
    double tp = 1;
    for (const auto& qc : dual) {
      qt0 = qt0 + tp * qc;
      tp *= t0;
    }
    if (magnitude(qt0) <= 1e3 * tolerance() * (1.0 + cm.max_mag())) {
      out.diagnosis = {DiagnosisKind::LineMotion,
                       "C has a real linear factor: the curve lies on a straight line"};
      return out;
    }
    // RPRP: norm = (t - t0)^2 * M_rot; the factorization loop still applies
    // with the double real root packed as a quadratic.
    const QuadraticFactor mlin{-2.0 * t0, t0 * t0};
    const RealPoly norm = cm.norm_poly();
    const RealDivMod rest = divmod(norm, mlin.poly() * mlin.poly());
    const auto mrot = quadratic_factorization(rest.quotient);
    if (mrot.size() != 1)
      return diagnose(DiagnosisKind::NoSolution, "unexpected norm structure in RPRP case");
    try {
      Factorization fa =
          detail::factor_with_quadratics(cm, {mrot[0], mlin}, false);
      Factorization fb =
          detail::factor_with_quadratics(cm, {mlin, mrot[0]}, false);
      out.factorizations = {fa, fb};
      out.diagnosis = {DiagnosisKind::RPRP,
                       "primal part has one real linear factor: coupler motion of an RPRP "
                       "linkage with mixed rotation/translation factors"};
    } catch (const Error& e) {
      out.diagnosis = {DiagnosisKind::RPRP,
                       std::string("RPRP case; factorization failed: ") + e.what()};
    }
    return out;
  }

  // Generic primal part. Check for coincident dyads before factoring.
  const RealPoly norm = cm.norm_poly();
  const RealPoly rep = repeated_quadratic(norm);
  if (rep.degree() >= 2) {
    const auto ms = quadratic_factorization(norm);
    try {
      Factorization f = detail::factor_with_quadratics(cm, ms, true);
      out.factorizations = {f};
    } catch (const Error&) {
    }
    out.diagnosis = {DiagnosisKind::CoincidentDyads,
                     "norm polynomial is the square of one quadratic: the two synthesized 2R "
                     "dyads coincide and no valid 4R linkage exists"};
    return out;
  }

  const auto ms = quadratic_factorization(norm);
  if (ms.size() != 2)
    return diagnose(DiagnosisKind::NoSolution, "interpolant is not quadratic");

  const Factorization fh = factor_with_order(cm, {ms[0], ms[1]});
  const Factorization fk = factor_with_order(cm, {ms[1], ms[0]});
  out.factorizations = {fh, fk};

  const DualQuaternion h1 = fh.factors[0], h2 = fh.factors[1];
  const DualQuaternion k1 = fk.factors[0], k2 = fk.factors[1];
  Linkage l = assemble_single_loop({h1, h2, conj(k2), conj(k1)}, {"h1", "h2", "k2*", "k1*"},
                                   "4R Bennett");
  validate_linkage(l);

  out.closure = ms[0].poly() * ms[1].poly();
  out.loop_residual = loop_residual(l, size_t{0}, standard_sweep());
  if (out.loop_residual > 1e-8)
    throw Error(Err::ResidualTooLarge, "4R loop closure residual " +
                                           std::to_string(out.loop_residual));
  out.coupler_link = 1;  // link {h2, k2*} carries the coupler motion
  out.linkage = std::move(l);
  out.diagnosis = {DiagnosisKind::Bennett4R, "generic three-pose Bennett synthesis"};
  return out;
}

MotionPolynomial line_symmetric_motion(double a, double b, double c) {
  if (a == 0 || b == 0 || c == 0)
    throw Error(Err::InvalidInput, "line_symmetric_motion requires a, b, c != 0");
  const DualQuaternion c2 = DualQuaternion::real(b * b + c * c);
  const DualQuaternion c1{{0, 0, 2 * a * c, 2 * a * b},
                          {0, 0, -2 * b * (a * a - c * c), 2 * c * (a * a + b * b)}};
  const DualQuaternion c0{{c * c - b * b, 2 * b * c, 0, 0},
                          {-4 * a * b * c, 2 * a * (c * c - b * b), 0, 0}};
  return MotionPolynomial::make({c0, c1, c2});
}

DiscriminantReport line_symmetric_discriminant(double a, double b, double c) {
  const MotionPolynomial m = line_symmetric_motion(a, b, c);
  const RealPoly norm = m.norm_poly();
  DiscriminantReport rep;
  rep.discriminant = quartic_discriminant(norm);
  rep.repeated_factor = repeated_quadratic(norm);
  rep.repeated = rep.repeated_factor.degree() >= 2;
  return rep;
}

namespace {

QuadraticFactor norm_quadratic(const DualQuaternion& h) {
  const DualNumber n = dnorm(h);
  return {-2.0 * h.p.w, n.re};
}

}  // namespace

FlipResult bennett_flip(const DualQuaternion& h1, const DualQuaternion& h2,
                        const DualQuaternion& p) {
  if (classify_generator(p) != GeneratorKind::Rotation)
    throw Error(Err::InvalidInput, "flip pivot p must be a rotation generator");

  const QuadraticFactor np = norm_quadratic(p);
  const QuadraticFactor n1 = norm_quadratic(h1);
  const QuadraticFactor n2 = norm_quadratic(h2);
  if (quadratic_close(np, n1, 1e-9) || quadratic_close(np, n2, 1e-9))
    throw Error(Err::FlipDegenerate,
                "pivot shares a norm quadratic with a factor: alternative factorization "
                "coincides with the original");

  const MotionPolynomial fa = MotionPolynomial::linear(h1) * MotionPolynomial::linear(p);
  const MotionPolynomial fb =
      MotionPolynomial::linear(conj(h2)) * MotionPolynomial::linear(p);

  FlipResult out;
  try {
    const Factorization ffg = factor_with_order(fa, {np, n1});
    const Factorization fqr = factor_with_order(fb, {np, n2});
    out.f = ffg.factors[0];
    out.g = ffg.factors[1];
    out.q = fqr.factors[0];
    out.r = conj(fqr.factors[1]);
    out.residual = std::max(coeff_distance(product_of(ffg), fa), coeff_distance(product_of(fqr), fb));
  } catch (const Error& e) {
    if (e.code() == Err::NonGeneric || e.code() == Err::RemainderNotInvertible ||
        e.code() == Err::RealRootFound || e.code() == Err::ResidualTooLarge)
      throw Error(Err::FlipDegenerate, std::string("flip failed for this pivot: ") + e.what());
    throw;
  }
  if (out.residual > 1e-9 * (1.0 + mag8(h1) + mag8(p)))
    throw Error(Err::FlipDegenerate, "flip identities exceed the residual bound");
  return out;
}

ReplacementLinkage build_replacement_linkage(const DualQuaternion& h1, const DualQuaternion& h2,
                                             const DualQuaternion& p) {
  ReplacementLinkage out;
  out.flip = bennett_flip(h1, h2, p);
  const DualQuaternion& f = out.flip.f;
  const DualQuaternion& g = out.flip.g;
  const DualQuaternion& r = out.flip.r;
  const DualQuaternion& q = out.flip.q;

  bool axes_coincide = false;
  try {
    dh_from_axes(axis_of(g), axis_of(r));
  } catch (const Error& e) {
    if (e.code() == Err::IdenticalAxes) axes_coincide = true;
    else throw;
  }
  // Two consecutive coincident axes act as one revolute joint; merge only
  // when the generators agree so the loop product stays exact.
  const bool merge = axes_coincide && mag8(g - r) <= 1e-8 * (1.0 + mag8(g));

  if (merge) {
    Linkage l;
    l.type = "5R Goldberg";
    l.joints = {make_joint(h1, "h1"), make_joint(h2, "h2"), make_joint(q, "q"),
                make_joint(conj(g), "gr*"), make_joint(conj(f), "f*")};
    l.links = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
    // The merged joint appears twice in the loop: once for conj(r), once for
    // conj(g); with g = r both entries use the same generator.
    l.loops = {{{0, false}, {1, false}, {2, false}, {3, false}, {3, false}, {4, false}}};
    validate_linkage(l);
    out.linkage = std::move(l);
    out.collapsed_to_5r = true;
  } else {
    Linkage l = assemble_single_loop({h1, h2, q, conj(r), conj(g), conj(f)},
                                     {"h1", "h2", "q", "r*", "g*", "f*"},
                                     axes_coincide ? "6R Waldron hybrid (coincident g/r axes)"
                                                   : "6R Waldron hybrid");
    validate_linkage(l);
    out.linkage = std::move(l);
  }
  out.coupler_link = 1;  // the link connecting h2 and q performs (t-h1)(t-h2)
  out.max_residual = max_loop_residual(out.linkage, standard_sweep());
  if (out.max_residual > 1e-8)
    throw Error(Err::ResidualTooLarge,
                "replacement linkage loop residual " + std::to_string(out.max_residual));
  return out;
}

ReplacementLinkage build_replacement_linkage(const DualQuaternion& h1, const DualQuaternion& h2,
                                             std::mt19937_64& rng, int max_retries) {
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    const DualQuaternion p = random_rotation(rng);
    try {
      return build_replacement_linkage(h1, h2, p);
    } catch (const Error& e) {
      if (e.code() != Err::FlipDegenerate && e.code() != Err::ResidualTooLarge) throw;
    }
  }
  throw Error(Err::FlipDegenerate, "no suitable pivot rotation found after " +
                                       std::to_string(max_retries) + " attempts");
}

DualQuaternion random_rotation(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  while (true) {
    const Quaternion p{u(rng), u(rng), u(rng), u(rng)};
    const Vec3 v = p.vec();
    if (length(v) < 0.2) continue;
    Vec3 d{u(rng), u(rng), u(rng)};
    d = d - (dot(d, v) / dot(v, v)) * v;  // Study projection
    return DualQuaternion{p, Quaternion::vector(d)};
  }
}

DualQuaternion random_planar_rotation(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  while (true) {
    const double w = u(rng), z = u(rng);
    if (std::abs(z) < 0.2) continue;
    return DualQuaternion{{w, 0, 0, z}, {0, u(rng), u(rng), 0}};
  }
}

DualQuaternion random_displacement(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  while (true) {
    const Quaternion p{u(rng), u(rng), u(rng), u(rng)};
    if (magnitude(p) < 0.2) continue;
    Quaternion d{u(rng), u(rng), u(rng), u(rng)};
    d = d - (dot4(p, d) / dot4(p, p)) * p;
    return DualQuaternion{p, d};
  }
}

}  // namespace motfact
