#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "ssddh/curve.hpp"
#include "ssddh/rational_map.hpp"

namespace ssddh {

// Field-generic isogeny machinery. F must also provide a free function
// poly_roots(const Poly<F>&) returning distinct roots sorted by lex_less.

/// Division polynomials f_n with psi_n = f_n for odd n and
/// psi_n = (2y + a1 x + a3) f_n for even n.
template <class F>
class DivisionPolynomials {
 public:
  explicit DivisionPolynomials(const WeierstrassCurve<F>& E) : E_(E), two_torsion_(E.zero()) {
    const F z = E.zero();
    const F b2 = E.b2(), b4 = E.b4(), b6 = E.b6(), b8 = E.b8();
    auto c = [&](long n) { return z.constant(n); };
    two_torsion_ = Poly<F>(z, {b6, c(2) * b4, b2, c(4)});
    cache_.insert_or_assign(0u, Poly<F>(z));
    cache_.insert_or_assign(1u, Poly<F>::constant(z.one_like()));
    cache_.insert_or_assign(2u, Poly<F>::constant(z.one_like()));
    cache_.insert_or_assign(3u, Poly<F>(z, {b8, c(3) * b6, c(3) * b4, b2, c(3)}));
    cache_.insert_or_assign(4u, Poly<F>(z, {b4 * b8 - b6 * b6, b2 * b8 - b4 * b6, c(10) * b8, c(10) * b6, c(5) * b4, b2, c(2)}));
  }

  // 4x^3 + b2 x^2 + 2 b4 x + b6 = (2y + a1 x + a3)^2 on the curve.
  const Poly<F>& two_torsion() const { return two_torsion_; }

  const Poly<F>& f(unsigned n) {
    if (auto it = cache_.find(n); it != cache_.end()) return it->second;
    const unsigned m = n / 2;
    const Poly<F> F2 = two_torsion_ * two_torsion_;
    Poly<F> result(E_.zero());
    if (n % 2 == 1) {
      const Poly<F> a = f(m + 2) * f(m).pow(3);
      const Poly<F> b = f(m - 1) * f(m + 1).pow(3);
      result = m % 2 == 0 ? F2 * a - b : a - F2 * b;
    } else {
      const Poly<F> g = f(m + 2) * f(m - 1).pow(2) - f(m - 2) * f(m + 1).pow(2);
      result = f(m) * g;
    }
    return cache_.emplace(n, std::move(result)).first->second;
  }

  // x([n]P) as a function of x(P); nullopt when [n]P = 0_E.
  std::optional<F> multiple_x(unsigned n, const F& x) {
    if (n == 1) return x;
    const F fn = f(n)(x);
    const F ft = two_torsion_(x);
    const F num = f(n - 1)(x) * f(n + 1)(x);
    const F den = fn * fn;
    if (n % 2 == 1) {
      if (den.is_zero()) return std::nullopt;
      return x - ft * num / den;
    }
    if ((ft * den).is_zero()) return std::nullopt;
    return x - num / (ft * den);
  }

 private:
  WeierstrassCurve<F> E_;
  Poly<F> two_torsion_;
  std::map<unsigned, Poly<F>> cache_;
};

enum class VeluModel {
  normalized,         // keeps a1, a2, a3 of the source
  short_weierstrass,  // followed by the translation to y^2 = x^3 + A x + B
};

// Map from E to its short Weierstrass model; characteristic not 2 or 3.
template <class F>
RationalMap<F> to_short_weierstrass(const WeierstrassCurve<F>& E) {
  const F z = E.zero();
  const Int p = z.characteristic();
  if (p == 2 || p == 3) throw CapabilityError("short Weierstrass model needs characteristic > 3");
  auto m = weierstrass_isomorphism(E, z.one_like(), E.b2() / z.constant(12L), E.a1() / z.constant(2L),
                                   E.a3() / z.constant(2L));
  if (!m.target.a1().is_zero() || !m.target.a2().is_zero() || !m.target.a3().is_zero()) {
    throw InternalError("short Weierstrass normalization failed");
  }
  return m;
}

/// Isogeny with the given kernel polynomial: degree 1 at a 2-torsion abscissa
/// (l = 2), otherwise the (l-1)/2 abscissae of a cyclic subgroup of odd order l.
/// The y-map preserves the invariant differential, so characteristic 2 is not
/// supported.
template <class F>
RationalMap<F> velu_isogeny(const WeierstrassCurve<F>& E, const Poly<F>& kernel,
                            VeluModel model = VeluModel::normalized) {
  const F z = E.zero();
  if (z.characteristic() == 2) throw CapabilityError("Velu y-map in characteristic 2 is not supported");
  if (kernel.degree() < 1) throw ArgumentError("kernel polynomial must have positive degree");
  auto c = [&](long n) { return z.constant(n); };
  const Poly<F> D = kernel.monic();
  const unsigned n = static_cast<unsigned>(D.degree());
  const F b2 = E.b2(), b4 = E.b4(), b6 = E.b6();
  DivisionPolynomials<F> div(E);
  using R = RationalFunction<F>;
  const Poly<F> xpoly = Poly<F>::x(z);

  F t = z;
  F w = z;
  R X(xpoly);
  unsigned l = 0;
  if (n == 1 && div.two_torsion()(-D.coeff(0)).is_zero()) {
    l = 2;
    const F x0 = -D.coeff(0);
    t = (c(6) * x0 * x0 + b2 * x0 + b4) / c(2);
    w = x0 * t;
    X = R(xpoly) + R(Poly<F>::constant(t), D);
  } else {
    l = 2 * n + 1;
    if (!(div.f(l) % D).is_zero()) throw ArgumentError("kernel polynomial does not divide the division polynomial");
    // D = x^n - s1 x^(n-1) + s2 x^(n-2) - s3 ...
    const F s1 = -D.coeff(n - 1);
    const F s2 = n >= 2 ? D.coeff(n - 2) : z;
    const F s3 = n >= 3 ? -D.coeff(n - 3) : z;
    const F p2 = s1 * s1 - c(2) * s2;
    const F p3 = s1 * s1 * s1 - c(3) * s1 * s2 + c(3) * s3;
    const F nn = c(static_cast<long>(n));
    t = c(6) * p2 + b2 * s1 + nn * b4;
    w = c(10) * p3 + c(2) * b2 * p2 + c(3) * b4 * s1 + nn * b6;
    const Poly<F> d1 = D.derivative();
    const Poly<F> d2 = d1.derivative();
    const Poly<F> phi = div.two_torsion() * (d1 * d1 - d2 * D) -
                        Poly<F>(z, {b4, b2, c(6)}) * d1 * D +
                        Poly<F>(z, {-c(2) * s1, c(static_cast<long>(l))}) * D * D;
    X = R(phi, D * D);
  }
  WeierstrassCurve<F> target(E.a1(), E.a2(), E.a3(), E.a4() - c(5) * t, E.a6() - b2 * t - c(7) * w);
  // 2Y + a1 X + a3 = X'(x) (2y + a1 x + a3)
  const R dX = X.derivative();
  const R lin(Poly<F>(z, {E.a3(), E.a1()}));
  const R y0 = (dX * lin - X * E.a1() - R(Poly<F>::constant(E.a3()))) * c(2).inverse();
  RationalMap<F> phi{E, target, X, dX, y0, Int(static_cast<unsigned long>(l)), MapKind::isogeny};
  if (!phi.lands_on_target()) throw ArgumentError("kernel polynomial does not define a subgroup");
  if (model == VeluModel::short_weierstrass) return compose(to_short_weierstrass(target), phi);
  return phi;
}

// Lex order on (u, r, s, t) tuples.
template <class F>
bool lex_less_tuple(const std::array<F, 4>& a, const std::array<F, 4>& b) {
  for (size_t i = 0; i < 4; ++i) {
    if (lex_less(a[i], b[i])) return true;
    if (lex_less(b[i], a[i])) return false;
  }
  return false;
}

/// All (u, r, s, t) with (x, y) |-> (u^2 x + r, u^3 y + s u^2 x + t) an
/// isomorphism E1 -> E2 over F, sorted lexicographically.
template <class F>
std::vector<std::array<F, 4>> isomorphism_parameters(const WeierstrassCurve<F>& E1, const WeierstrassCurve<F>& E2) {
  std::vector<std::array<F, 4>> out;
  if (E1.j_invariant() != E2.j_invariant()) return out;
  const F z = E1.zero();
  const F one = z.one_like();
  const Int p = z.characteristic();
  auto c = [&](long n) { return z.constant(n); };
  using P = Poly<F>;
  auto binomial_roots = [&](unsigned n, const F& value) {
    std::vector<F> coeffs(n + 1, z);
    coeffs[0] = -value;
    coeffs[n] = one;
    return poly_roots(P(z, std::move(coeffs)));
  };

  std::vector<F> us;
  if (p == 2 || p == 3) {
    us = binomial_roots(12, E2.discriminant() / E1.discriminant());
  } else {
    const F c4a = E1.c4(), c4b = E2.c4(), c6a = E1.c6(), c6b = E2.c6();
    if (c4a.is_zero() != c4b.is_zero() || c6a.is_zero() != c6b.is_zero()) return out;
    if (c4a.is_zero()) {
      us = binomial_roots(6, c6b / c6a);
    } else if (c6a.is_zero()) {
      us = binomial_roots(4, c4b / c4a);
    } else {
      us = binomial_roots(2, c6b * c4a / (c6a * c4b));
    }
  }

  // Primed coefficients belong to E1, plain ones to E2.
  const F &A1 = E1.a1(), &A2 = E1.a2(), &A3 = E1.a3(), &A4 = E1.a4(), &A6 = E1.a6();
  const F &a1 = E2.a1(), &a2 = E2.a2(), &a3 = E2.a3(), &a4 = E2.a4(), &a6 = E2.a6();
  auto try_add = [&](const F& u, const F& r, const F& s, const F& t) {
    auto m = weierstrass_isomorphism(E1, u, r, s, t);
    if (m.target == E2) out.push_back({u, r, s, t});
  };
  for (const F& u : us) {
    const F u2 = u * u, u3 = u2 * u, u4 = u2 * u2, u6 = u3 * u3;
    if (p == 2) {
      if (!a1.is_zero()) {
        const F r = (u3 * A3 - a3) / a1;
        for (const F& s : poly_roots(P(z, {a2 + r - u2 * A2, a1, one}))) {
          const F t = (u4 * A4 - a4 - s * a3 - r * s * a1 - r * r) / a1;
          try_add(u, r, s, t);
        }
      } else {
        const F k = u2 * A2 - a2;
        for (const F& s : poly_roots(P(z, {k * k + a4 - u4 * A4, a3, z, z, one}))) {
          const F r = k - s * s;
          for (const F& t : poly_roots(P(z, {a6 + r * a4 + r * r * a2 + r * r * r - u6 * A6, a3, one}))) {
            try_add(u, r, s, t);
          }
        }
      }
    } else if (p == 3) {
      const F s = (u * A1 - a1) / c(2);
      const P r = P::x(z);
      const P t = (P::constant(u3 * A3 - a3) - r * a1) * c(2).inverse();
      const P S = P::constant(s);
      const P e4 = P::constant(a4 - s * a3 - u4 * A4) + r * (c(2) * a2) - (t + r * s) * a1 + r * r * c(3) -
                   t * (c(2) * s);
      const P e6 = P::constant(a6 - u6 * A6) + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1;
      const P g = e4.is_zero() ? e6 : gcd(e4, e6);
      for (const F& rr : poly_roots(g)) try_add(u, rr, s, t(rr));
    } else {
      const F s = (u * A1 - a1) / c(2);
      const F r = (u2 * A2 - a2 + s * a1 + s * s) / c(3);
      const F t = (u3 * A3 - a3 - r * a1) / c(2);
      try_add(u, r, s, t);
    }
  }
  std::sort(out.begin(), out.end(), lex_less_tuple<F>);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Isomorphism E1 -> E2 with lexicographically smallest (u, r, s, t), or
// nullopt when the curves are not isomorphic over F.
template <class F>
std::optional<RationalMap<F>> find_isomorphism(const WeierstrassCurve<F>& E1, const WeierstrassCurve<F>& E2) {
  auto params = isomorphism_parameters(E1, E2);
  if (params.empty()) return std::nullopt;
  const auto& [u, r, s, t] = params.front();
  return weierstrass_isomorphism(E1, u, r, s, t);
}

}  // namespace ssddh
