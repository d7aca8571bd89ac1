#include "motfact/rpoly.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace motfact {

namespace {

// A root counts as real when its imaginary part is below this threshold;
// borderline cases raise RealRootFound rather than silently factoring.
bool is_real_root(const std::complex<double>& z) {
  return std::abs(z.imag()) < 1e-7 * (1.0 + std::abs(z.real()));
}

}  // namespace

RealPoly::RealPoly(std::vector<double> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) c_ = {0.0};
  double maxabs = 0;
  for (double v : c_) maxabs = std::max(maxabs, std::abs(v));
  const double cutoff = tolerance() * maxabs;
  while (c_.size() > 1 && std::abs(c_.back()) <= cutoff) c_.pop_back();
  if (c_.size() == 1 && std::abs(c_[0]) <= cutoff) c_[0] = 0.0;
}

RealPoly RealPoly::monomial(int degree, double coeff) {
  std::vector<double> c(static_cast<size_t>(degree) + 1, 0.0);
  c.back() = coeff;
  return RealPoly(std::move(c));
}

double RealPoly::max_abs() const {
  double m = 0;
  for (double v : c_) m = std::max(m, std::abs(v));
  return m;
}

double RealPoly::eval(double t) const {
  double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::complex<double> RealPoly::eval(std::complex<double> t) const {
  std::complex<double> acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

RealPoly RealPoly::derivative() const {
  if (c_.size() == 1) return RealPoly();
  std::vector<double> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = static_cast<double>(i) * c_[i];
  return RealPoly(std::move(d));
}

RealPoly RealPoly::monic() const {
  if (is_zero()) return *this;
  return (1.0 / leading()) * *this;
}

RealPoly RealPoly::trimmed(double cutoff) const {
  std::vector<double> c = c_;
  while (c.size() > 1 && std::abs(c.back()) <= cutoff) c.pop_back();
  RealPoly out;
  out.c_ = std::move(c);
  return out;
}

RealPoly operator+(const RealPoly& a, const RealPoly& b) {
  std::vector<double> c(std::max(a.coeffs().size(), b.coeffs().size()), 0.0);
  for (size_t i = 0; i < c.size(); ++i) c[i] = a[static_cast<int>(i)] + b[static_cast<int>(i)];
  return RealPoly(std::move(c));
}

RealPoly operator-(const RealPoly& a, const RealPoly& b) {
  std::vector<double> c(std::max(a.coeffs().size(), b.coeffs().size()), 0.0);
  for (size_t i = 0; i < c.size(); ++i) c[i] = a[static_cast<int>(i)] - b[static_cast<int>(i)];
  return RealPoly(std::move(c));
}

RealPoly operator*(const RealPoly& a, const RealPoly& b) {
  if (a.is_zero() || b.is_zero()) return RealPoly();
  std::vector<double> c(a.coeffs().size() + b.coeffs().size() - 1, 0.0);
  for (size_t i = 0; i < a.coeffs().size(); ++i)
    for (size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return RealPoly(std::move(c));
}

RealPoly operator*(double s, const RealPoly& a) {
  std::vector<double> c = a.coeffs();
  for (double& v : c) v *= s;
  return RealPoly(std::move(c));
}

RealDivMod divmod(const RealPoly& a, const RealPoly& b) {
  if (b.is_zero()) throw Error(Err::InvalidInput, "division by zero polynomial");
  std::vector<double> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {RealPoly(), a};
  std::vector<double> q(static_cast<size_t>(a.degree() - db) + 1, 0.0);
  for (int k = a.degree() - db; k >= 0; --k) {
    const double f = r[static_cast<size_t>(k + db)] / b.leading();
    q[static_cast<size_t>(k)] = f;
    for (int j = 0; j <= db; ++j) r[static_cast<size_t>(k + j)] -= f * b[j];
  }
  r.resize(static_cast<size_t>(std::max(db, 1)));
  return {RealPoly(std::move(q)), RealPoly(std::move(r))};
}

RealPoly approx_gcd(RealPoly a, RealPoly b, double cutoff) {
  a = a.trimmed(cutoff);
  b = b.trimmed(cutoff);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero() && b.max_abs() > cutoff) {
    // Monic-normalize the divisor to control coefficient growth.
    b = b.monic();
    RealPoly r = divmod(a, b).remainder.trimmed(cutoff);
    a = b;
    b = r;
  }
  return a.monic();
}

std::vector<std::complex<double>> poly_roots(const RealPoly& p) {
  const int n = p.degree();
  if (n <= 0) return {};
  const RealPoly m = p.monic();
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -m[i];
  Eigen::EigenSolver<Eigen::MatrixXd> es(companion, false);

  std::vector<std::complex<double>> roots(static_cast<size_t>(n));
  const RealPoly dp = p.derivative();
  for (int i = 0; i < n; ++i) {
    std::complex<double> z = es.eigenvalues()(i);
    for (int it = 0; it < 20; ++it) {
      const std::complex<double> f = p.eval(z);
      const std::complex<double> df = dp.eval(z);
      if (std::abs(df) == 0.0) break;
      const std::complex<double> step = f / df;
      z -= step;
      if (std::abs(step) < 1e-15 * (1.0 + std::abs(z))) break;
    }
    roots[static_cast<size_t>(i)] = z;
  }
  return roots;
}

bool quadratic_close(const QuadraticFactor& m1, const QuadraticFactor& m2, double tol) {
  const double scale = 1.0 + std::max({std::abs(m1.a), std::abs(m1.b), std::abs(m2.a), std::abs(m2.b)});
  return std::abs(m1.a - m2.a) <= tol * scale && std::abs(m1.b - m2.b) <= tol * scale;
}

std::vector<QuadraticFactor> quadratic_factorization(const RealPoly& n) {
  if (n.degree() % 2 != 0 || n.degree() == 0)
    throw Error(Err::OddDegree, "norm polynomial must have positive even degree");
  if (n.leading() <= 0)
    throw Error(Err::InvalidInput, "norm polynomial must have positive leading coefficient");

  auto roots = poly_roots(n);
  for (const auto& z : roots) {
    if (is_real_root(z))
      throw RealRootFoundError(z.real(), "norm polynomial has a real root (non-generic motion)");
  }

  // Conjugate pairing by nearest imaginary partner.
  std::vector<std::complex<double>> upper, lower;
  for (const auto& z : roots) (z.imag() > 0 ? upper : lower).push_back(z);
  if (upper.size() != lower.size())
    throw Error(Err::InvalidInput, "conjugate pairing failed on norm polynomial roots");

  std::vector<QuadraticFactor> factors;
  factors.reserve(upper.size());
  for (const auto& z : upper) {
    size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < lower.size(); ++i) {
      const double d = std::abs(std::conj(z) - lower[i]);
      if (d < best_d) {
        best_d = d;
        best = i;
      }
    }
    const std::complex<double> zr = 0.5 * (z + std::conj(lower[best]));
    lower.erase(lower.begin() + static_cast<long>(best));
    factors.push_back({-2.0 * zr.real(), std::norm(zr)});
  }

  std::sort(factors.begin(), factors.end(), [](const QuadraticFactor& u, const QuadraticFactor& v) {
    return u.a != v.a ? u.a < v.a : u.b < v.b;
  });
  return factors;
}

RealPoly greatest_real_factor(const std::vector<Quaternion>& coeffs) {
  if (coeffs.empty()) throw Error(Err::InvalidInput, "empty polynomial");
  std::vector<RealPoly> coords(4);
  {
    std::vector<double> w(coeffs.size()), x(coeffs.size()), y(coeffs.size()), z(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) {
      w[i] = coeffs[i].w;
      x[i] = coeffs[i].x;
      y[i] = coeffs[i].y;
      z[i] = coeffs[i].z;
    }
    coords[0] = RealPoly(std::move(w));
    coords[1] = RealPoly(std::move(x));
    coords[2] = RealPoly(std::move(y));
    coords[3] = RealPoly(std::move(z));
  }

  double maxnorm = 0;
  for (const auto& c : coords) maxnorm = std::max(maxnorm, c.max_abs());
  if (maxnorm == 0) throw Error(Err::InvalidInput, "zero polynomial");
  const double cutoff = tolerance() * maxnorm;

  RealPoly g;
  bool have = false;
  for (const auto& c : coords) {
    if (c.is_zero() || c.max_abs() <= cutoff) continue;
    g = have ? approx_gcd(g, c, cutoff) : c.monic();
    have = true;
    if (g.degree() == 0) break;
  }
  return have ? g : RealPoly::constant(1.0);
}

RealPoly repeated_quadratic(const RealPoly& n) {
  if (n.degree() <= 0) return RealPoly::constant(1.0);
  const double cutoff = tolerance() * std::max(n.max_abs(), n.derivative().max_abs());
  return approx_gcd(n, n.derivative(), cutoff);
}

double quartic_discriminant(const RealPoly& p) {
  if (p.degree() > 4) throw Error(Err::InvalidInput, "quartic_discriminant expects degree <= 4");
  const double a = p[4], b = p[3], c = p[2], d = p[1], e = p[0];
  return 256 * a * a * a * e * e * e - 192 * a * a * b * d * e * e - 128 * a * a * c * c * e * e +
         144 * a * a * c * d * d * e - 27 * a * a * d * d * d * d + 144 * a * b * b * c * e * e -
         6 * a * b * b * d * d * e - 80 * a * b * c * c * d * e + 18 * a * b * c * d * d * d +
         16 * a * c * c * c * c * e - 4 * a * c * c * c * d * d - 27 * b * b * b * b * e * e +
         18 * b * b * b * c * d * e - 4 * b * b * b * d * d * d - 4 * b * b * c * c * c * e +
         b * b * c * c * d * d;
}

}  // namespace motfact
