#include "motfact/factor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace motfact {

namespace detail {

Factorization factor_with_quadratics(const MotionPolynomial& monic_c,
                                     const std::vector<QuadraticFactor>& order,
                                     bool enforce_generic) {
  const int n = monic_c.degree();
  if (static_cast<int>(order.size()) != n)
    throw Error(Err::InvalidInput, "order must list one quadratic factor per degree");

  if (enforce_generic) {
    const RealPoly grf = greatest_real_factor(monic_c.primal());
    if (grf.degree() > 0)
      throw Error(Err::NonGeneric, "primal part has a real factor of degree " +
                                       std::to_string(grf.degree()));
  }

  Factorization out;
  out.factors.resize(static_cast<size_t>(n));
  out.norms.assign(order.begin(), order.end());

  MotionPolynomial cur = monic_c;
  for (int i = n - 1; i >= 0; --i) {
    const QuadraticFactor& m = order[static_cast<size_t>(i)];
    DualQuaternion h;
    if (cur.degree() == 1) {
      h = -cur.coeff(0);
    } else {
      const DivisionResult dv = divide(cur, MotionPolynomial::from_real(m.poly()));
      DualQuaternion r1 = dv.remainder.degree() >= 1 ? dv.remainder.coeff(1) : DualQuaternion{};
      DualQuaternion r0 = dv.remainder.coeff(0);
      const double scale = dv.remainder.max_mag();
      if (magnitude(r1.p) <= tolerance() * (1.0 + scale))
        throw RemainderNotInvertibleError(
            r1, r0, "linear remainder has no unique zero (non-generic input)");
      h = -(inverse(r1) * r0);
    }
    // The zero of the remainder satisfies (t-h)(t-conj(h)) = M.
    const DualNumber hn = dnorm(h);
    const double nscale = 1.0 + std::abs(m.a) + std::abs(m.b) + mag8(h) * mag8(h);
    if (std::abs(hn.re - m.b) > 1e-6 * nscale || std::abs(-2.0 * h.p.w - m.a) > 1e-6 * nscale ||
        std::abs(hn.du) > 1e-6 * nscale)
      throw Error(Err::ResidualTooLarge, "extracted factor does not match its norm quadratic");

    out.factors[static_cast<size_t>(i)] = h;
    cur = divide(cur, MotionPolynomial::linear(h)).quotient;
  }
  return out;
}

}  // namespace detail

namespace {

MotionPolynomial monic_of(const MotionPolynomial& c) {
  MotionPolynomial m = make_monic(c).poly;
  if (!m.is_validated()) m.validate();
  return m;
}

void check_order_matches_norm(const MotionPolynomial& monic_c,
                              const std::vector<QuadraticFactor>& order) {
  RealPoly prod = RealPoly::constant(1.0);
  for (const auto& m : order) prod = prod * m.poly();
  const RealPoly norm = monic_c.norm_poly();
  const RealPoly diff = prod - norm;
  if (diff.max_abs() > 1e-8 * (1.0 + norm.max_abs()))
    throw Error(Err::InvalidInput,
                "order is not a permutation of the norm polynomial's quadratic factors");
}

bool same_factorization(const Factorization& a, const Factorization& b) {
  if (a.factors.size() != b.factors.size()) return false;
  for (size_t i = 0; i < a.factors.size(); ++i)
    if (!projectively_equal(a.factors[i], b.factors[i], 1e-8)) return false;
  return true;
}

}  // namespace

Factorization factor_with_order(const MotionPolynomial& c,
                                const std::vector<QuadraticFactor>& order) {
  const MotionPolynomial monic_c = monic_of(c);
  check_order_matches_norm(monic_c, order);
  Factorization f = detail::factor_with_quadratics(monic_c, order, true);
  const double residual = verify_factorization(c, f);
  if (residual > 1e-8 * (1.0 + monic_c.max_mag()))
    throw Error(Err::ResidualTooLarge,
                "factorization residual " + std::to_string(residual) + " exceeds bound");
  return f;
}

Factorization factor_with_order(const MotionPolynomial& c, const std::vector<int>& permutation) {
  const MotionPolynomial monic_c = monic_of(c);
  const auto sorted = quadratic_factorization(monic_c.norm_poly());
  if (permutation.size() != sorted.size())
    throw Error(Err::InvalidInput, "permutation length does not match factor count");
  std::vector<QuadraticFactor> order;
  std::vector<bool> used(sorted.size(), false);
  for (int idx : permutation) {
    if (idx < 0 || idx >= static_cast<int>(sorted.size()) || used[static_cast<size_t>(idx)])
      throw Error(Err::InvalidInput, "permutation must use each factor index exactly once");
    used[static_cast<size_t>(idx)] = true;
    order.push_back(sorted[static_cast<size_t>(idx)]);
  }
  return factor_with_order(c, order);
}

AllFactorizations all_factorizations(const MotionPolynomial& c) {
  const MotionPolynomial monic_c = monic_of(c);
  const auto sorted = quadratic_factorization(monic_c.norm_poly());
  const int n = static_cast<int>(sorted.size());

  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);

  AllFactorizations out;
  do {
    FactorizationAttempt attempt;
    attempt.permutation = perm;
    try {
      std::vector<QuadraticFactor> order;
      for (int idx : perm) order.push_back(sorted[static_cast<size_t>(idx)]);
      Factorization f = detail::factor_with_quadratics(monic_c, order, true);
      const double residual = verify_factorization(monic_c, f);
      if (residual > 1e-8 * (1.0 + monic_c.max_mag()))
        throw Error(Err::ResidualTooLarge, "residual " + std::to_string(residual));
      attempt.result = f;
      bool duplicate = false;
      for (const auto& seen : out.factorizations) {
        if (same_factorization(seen, f)) {
          duplicate = true;
          break;
        }
      }
      if (duplicate)
        out.coincident = true;
      else
        out.factorizations.push_back(std::move(f));
    } catch (const Error& e) {
      attempt.error = e.what();
    }
    out.attempts.push_back(std::move(attempt));
  } while (std::next_permutation(perm.begin(), perm.end()));

  return out;
}

double verify_factorization(const MotionPolynomial& c, const Factorization& f) {
  MotionPolynomial prod = product_of(f);
  MotionPolynomial monic_c = c.is_zero() ? c : make_monic(c).poly;
  double residual = coeff_distance(prod, monic_c);
  for (size_t i = 0; i < f.factors.size() && i < f.norms.size(); ++i) {
    const DualQuaternion& h = f.factors[i];
    const DualNumber hn = dnorm(h);
    residual = std::max(residual, std::abs(-2.0 * h.p.w - f.norms[i].a));
    residual = std::max(residual, std::abs(hn.re - f.norms[i].b));
    residual = std::max(residual, std::abs(hn.du));
    residual = std::max(residual, std::abs(2.0 * h.d.w));
  }
  return residual;
}

}  // namespace motfact
