#include "motfact/mpoly.hpp"

#include <algorithm>
#include <cmath>

namespace motfact {

namespace {

std::vector<DualQuaternion> trim_trailing(std::vector<DualQuaternion> c) {
  if (c.empty()) c = {DualQuaternion::real(0)};
  double maxabs = 0;
  for (const auto& v : c) maxabs = std::max(maxabs, mag8(v));
  const double cutoff = tolerance() * maxabs;
  while (c.size() > 1 && mag8(c.back()) <= cutoff) c.pop_back();
  return c;
}

// Raw convolution of coefficient vectors, order-preserving.
std::vector<DualQuaternion> convolve(const std::vector<DualQuaternion>& a,
                                     const std::vector<DualQuaternion>& b) {
  std::vector<DualQuaternion> c(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = c[i + j] + a[i] * b[j];
  return c;
}

}  // namespace

MotionPolynomial MotionPolynomial::raw(std::vector<DualQuaternion> coeffs) {
  return MotionPolynomial(trim_trailing(std::move(coeffs)), false);
}

MotionPolynomial MotionPolynomial::make(std::vector<DualQuaternion> coeffs) {
  if (coeffs.empty()) throw Error(Err::InvalidInput, "empty coefficient list");
  MotionPolynomial c = raw(std::move(coeffs));
  c.validate();
  return c;
}

MotionPolynomial MotionPolynomial::linear(const DualQuaternion& h) {
  MotionPolynomial p = raw({-h, DualQuaternion::identity()});
  p.validated_ = classify_generator(h) != GeneratorKind::Invalid;
  return p;
}

MotionPolynomial MotionPolynomial::from_real(const RealPoly& p) {
  std::vector<DualQuaternion> c(p.coeffs().size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = DualQuaternion::real(p.coeffs()[i]);
  MotionPolynomial out = raw(std::move(c));
  out.validated_ = !p.is_zero();
  return out;
}

bool MotionPolynomial::is_zero() const {
  return c_.size() == 1 && mag8(c_[0]) == 0.0;
}

double MotionPolynomial::max_mag() const {
  double m = 0;
  for (const auto& v : c_) m = std::max(m, mag8(v));
  return m;
}

DualQuaternion MotionPolynomial::eval(double t) const {
  DualQuaternion acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = t * acc + *it;
  return acc;
}

DualQuaternion MotionPolynomial::eval_at(const DualQuaternion& h) const {
  // Right-Horner: ((c_n h + c_{n-1}) h + ...) keeps every coefficient to the
  // left of its power of h.
  DualQuaternion acc = c_.back();
  for (auto it = c_.rbegin() + 1; it != c_.rend(); ++it) acc = acc * h + *it;
  return acc;
}

std::vector<Quaternion> MotionPolynomial::primal() const {
  std::vector<Quaternion> p(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) p[i] = c_[i].p;
  return p;
}

std::vector<Quaternion> MotionPolynomial::dual() const {
  std::vector<Quaternion> d(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) d[i] = c_[i].d;
  return d;
}

MotionPolynomial MotionPolynomial::conjugated() const {
  std::vector<DualQuaternion> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = conj(c_[i]);
  MotionPolynomial out = raw(std::move(c));
  out.validated_ = validated_;
  return out;
}

MotionPolynomial& MotionPolynomial::validate() {
  if (mag8(c_.back()) == 0.0 || magnitude(c_.back().p) <= tolerance() * mag8(c_.back()))
    throw Error(Err::LeadingNotInvertible, "leading coefficient is not invertible");

  // Norm polynomial coefficients are dual numbers; "even real" requires the
  // dual scalar parts to vanish. The vector parts cancel identically and
  // only carry roundoff.
  const auto nc = convolve(c_, conjugated().coeffs());
  double max_primal = 0;
  for (const auto& v : nc) max_primal = std::max(max_primal, std::abs(v.p.w));
  const double tol = tolerance() * (1.0 + max_primal);
  for (const auto& v : nc) {
    if (std::abs(v.d.w) > tol)
      throw Error(Err::NotMotionPolynomial,
                  "norm polynomial is not real (curve leaves the Study quadric)");
  }
  validated_ = true;
  return *this;
}

RealPoly MotionPolynomial::norm_poly() const {
  const auto nc = convolve(c_, conjugated().coeffs());
  double max_primal = 0;
  for (const auto& v : nc) max_primal = std::max(max_primal, std::abs(v.p.w));
  const double tol = tolerance() * (1.0 + max_primal);
  std::vector<double> out(nc.size());
  for (size_t i = 0; i < nc.size(); ++i) {
    if (std::abs(nc[i].d.w) > tol)
      throw Error(Err::NotMotionPolynomial, "norm polynomial is not real");
    out[i] = nc[i].p.w;
  }
  return RealPoly(std::move(out));
}

MotionPolynomial operator+(const MotionPolynomial& a, const MotionPolynomial& b) {
  std::vector<DualQuaternion> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (size_t i = 0; i < c.size(); ++i) {
    if (i < a.coeffs().size()) c[i] = c[i] + a.coeffs()[i];
    if (i < b.coeffs().size()) c[i] = c[i] + b.coeffs()[i];
  }
  return MotionPolynomial::raw(std::move(c));
}

MotionPolynomial operator-(const MotionPolynomial& a, const MotionPolynomial& b) {
  std::vector<DualQuaternion> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (size_t i = 0; i < c.size(); ++i) {
    if (i < a.coeffs().size()) c[i] = c[i] + a.coeffs()[i];
    if (i < b.coeffs().size()) c[i] = c[i] - b.coeffs()[i];
  }
  return MotionPolynomial::raw(std::move(c));
}

MotionPolynomial operator*(const MotionPolynomial& a, const MotionPolynomial& b) {
  // norm(AB) = norm(A) norm(B), so a product of validated polynomials is
  // validated without re-checking.
  return MotionPolynomial(trim_trailing(convolve(a.c_, b.c_)),
                          a.validated_ && b.validated_);
}

MotionPolynomial operator*(double s, const MotionPolynomial& a) {
  std::vector<DualQuaternion> c = a.coeffs();
  for (auto& v : c) v = s * v;
  MotionPolynomial out = MotionPolynomial::raw(std::move(c));
  return out;
}

MotionPolynomial operator*(const DualQuaternion& s, const MotionPolynomial& a) {
  std::vector<DualQuaternion> c = a.coeffs();
  for (auto& v : c) v = s * v;
  return MotionPolynomial::raw(std::move(c));
}

MotionPolynomial operator*(const MotionPolynomial& a, const DualQuaternion& s) {
  std::vector<DualQuaternion> c = a.coeffs();
  for (auto& v : c) v = v * s;
  return MotionPolynomial::raw(std::move(c));
}

double coeff_distance(const MotionPolynomial& a, const MotionPolynomial& b) {
  double d = 0;
  const int n = std::max(a.degree(), b.degree());
  for (int i = 0; i <= n; ++i) {
    const DualQuaternion da = i <= a.degree() ? a.coeff(i) : DualQuaternion{};
    const DualQuaternion db = i <= b.degree() ? b.coeff(i) : DualQuaternion{};
    d = std::max(d, mag8(da - db));
  }
  return d;
}

DivisionResult divide(const MotionPolynomial& a, const MotionPolynomial& b) {
  const DualQuaternion lead_defect = b.leading() - DualQuaternion::identity();
  if (mag8(lead_defect) > tolerance() * (1.0 + b.max_mag()))
    throw Error(Err::NotMonic, "right division requires a monic divisor");

  std::vector<DualQuaternion> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {MotionPolynomial::raw({}), a};

  std::vector<DualQuaternion> q(static_cast<size_t>(a.degree() - db) + 1);
  while (static_cast<int>(r.size()) - 1 >= db && r.size() > 1) {
    const int dr = static_cast<int>(r.size()) - 1;
    const DualQuaternion c = r.back();
    const int n = dr - db;
    q[static_cast<size_t>(n)] = q[static_cast<size_t>(n)] + c;
    // R <- R - B c t^n; the factor order matters, c multiplies B from the
    // right.
    for (int j = 0; j <= db; ++j)
      r[static_cast<size_t>(n + j)] = r[static_cast<size_t>(n + j)] - b.coeff(j) * c;
    r.pop_back();  // leading term cancels exactly (B is monic)
  }
  return {MotionPolynomial::raw(std::move(q)), MotionPolynomial::raw(std::move(r))};
}

MonicResult make_monic(const MotionPolynomial& c) {
  const DualQuaternion lead = c.leading();
  DualQuaternion inv;
  try {
    inv = inverse(lead);
  } catch (const Error&) {
    throw Error(Err::LeadingNotInvertible, "leading coefficient is not invertible");
  }
  MotionPolynomial monic = inv * c;
  if (c.is_validated()) monic.validate();
  const double vec_mag = std::sqrt(mag8(lead) * mag8(lead) - lead.p.w * lead.p.w);
  const bool real_lead = vec_mag <= tolerance() * (1.0 + mag8(lead));
  return {monic, lead, real_lead};
}

MotionPolynomial product_of(const Factorization& f) {
  MotionPolynomial p = MotionPolynomial::one();
  for (const auto& h : f.factors) p = p * MotionPolynomial::linear(h);
  return p;
}

}  // namespace motfact
