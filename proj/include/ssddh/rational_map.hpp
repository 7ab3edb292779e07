#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ssddh/curve.hpp"
#include "ssddh/poly.hpp"

namespace ssddh {

/// num/den in lowest terms with a monic denominator.
template <class F>
class RationalFunction {
 public:
  explicit RationalFunction(Poly<F> num) : num_(std::move(num)), den_(Poly<F>::constant(num_.zero_element().one_like())) {}
  RationalFunction(Poly<F> num, Poly<F> den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

  const Poly<F>& num() const { return num_; }
  const Poly<F>& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  int degree() const { return std::max(num_.degree(), den_.degree()); }

  // nullopt at a pole.
  std::optional<F> operator()(const F& x) const {
    const F d = den_(x);
    if (d.is_zero()) return std::nullopt;
    return num_(x) / d;
  }

  RationalFunction derivative() const {
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + b * a.num_.zero_element().constant(-1L);
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator*(const RationalFunction& a, const F& c) {
    return RationalFunction(a.num_ * c, a.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw ArgumentError("rational function division by zero");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }

  // this(inner(x)), homogenized so no intermediate fractions appear.
  RationalFunction compose(const RationalFunction& inner) const {
    const int m = degree();
    if (m <= 0) return *this;
    const F& zero = num_.zero_element();
    std::vector<Poly<F>> p_pow{Poly<F>::constant(zero.one_like())};
    std::vector<Poly<F>> q_pow{Poly<F>::constant(zero.one_like())};
    for (int i = 1; i <= m; ++i) {
      p_pow.push_back(p_pow.back() * inner.num_);
      q_pow.push_back(q_pow.back() * inner.den_);
    }
    auto homog = [&](const Poly<F>& f) {
      Poly<F> acc(zero);
      for (int i = 0; i <= f.degree(); ++i) {
        if (!f.coeff(i).is_zero()) acc += p_pow[i] * q_pow[m - i] * f.coeff(i);
      }
      return acc;
    };
    return RationalFunction(homog(num_), homog(den_));
  }

  bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }

  std::string to_string() const {
    if (den_.degree() == 0) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
  }

 private:
  void reduce() {
    if (den_.is_zero()) throw ArgumentError("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = Poly<F>::constant(den_.zero_element().one_like());
      return;
    }
    const Poly<F> g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
    const F inv = den_.leading().inverse();
    num_ *= inv;
    den_ *= inv;
  }

  Poly<F> num_;
  Poly<F> den_;
};

enum class MapKind { isogeny, isomorphism };

inline const char* to_string(MapKind k) { return k == MapKind::isogeny ? "isogeny" : "isomorphism"; }

/// Morphism source -> target of the form
///   (x, y) |-> (X(x), Yy(x) * y + Y0(x))
/// with X, Yy, Y0 rational in x. Every isogeny between Weierstrass models has
/// this shape. Points where the denominator of X vanishes map to 0_E.
template <class F>
struct RationalMap {
  WeierstrassCurve<F> source;
  WeierstrassCurve<F> target;
  RationalFunction<F> x_map;
  RationalFunction<F> y_coeff;
  RationalFunction<F> y_const;
  Int degree;
  MapKind kind;

  Point<F> operator()(const Point<F>& P) const {
    if (P.is_identity()) return P;
    auto X = x_map(P.x());
    if (!X) return Point<F>::identity();
    auto A = y_coeff(P.x());
    auto B = y_const(P.x());
    if (!A || !B) return Point<F>::identity();
    return Point<F>(*X, *A * P.y() + *B);
  }

  // Exact check that the generic point of source lands on target.
  bool lands_on_target() const {
    const auto& E = source;
    const auto& T = target;
    const F zero = E.zero();
    using R = RationalFunction<F>;
    auto cst = [&](const F& c) { return R(Poly<F>::constant(c)); };
    const R x(Poly<F>::x(zero));
    const R f = ((x + cst(E.a2())) * x + cst(E.a4())) * x + cst(E.a6());
    const R lin = x * E.a1() + cst(E.a3());
    const R& X = x_map;
    const R& A = y_coeff;
    const R& B = y_const;
    const R TX = X * T.a1() + cst(T.a3());
    const R y_part = A * B * zero.constant(2L) - A * A * lin + TX * A;
    const R c_part = A * A * f + B * B + TX * B;
    const R rhs = ((X + cst(T.a2())) * X + cst(T.a4())) * X + cst(T.a6());
    return y_part.is_zero() && (c_part - rhs).is_zero();
  }
};

template <class F>
RationalMap<F> identity_map(const WeierstrassCurve<F>& E) {
  const F zero = E.zero();
  using R = RationalFunction<F>;
  return {E,
          E,
          R(Poly<F>::x(zero)),
          R(Poly<F>::constant(zero.one_like())),
          R(Poly<F>(zero)),
          Int(1),
          MapKind::isomorphism};
}

// g o f. Throws when f's target differs from g's source.
template <class F>
RationalMap<F> compose(const RationalMap<F>& g, const RationalMap<F>& f) {
  if (f.target != g.source) throw ArgumentError("compose: target/source mismatch");
  auto X = g.x_map.compose(f.x_map);
  auto A = g.y_coeff.compose(f.x_map);
  auto B = g.y_const.compose(f.x_map);
  const MapKind kind =
      f.kind == MapKind::isomorphism && g.kind == MapKind::isomorphism ? MapKind::isomorphism : MapKind::isogeny;
  return {f.source, g.target, X, A * f.y_coeff, A * f.y_const + B, f.degree * g.degree, kind};
}

// Applies a ring homomorphism to every coefficient; like is any element of
// the codomain field.
template <class G, class F, class Fn>
RationalFunction<G> map_coefficients(const RationalFunction<F>& f, const G& like, Fn fn) {
  auto lift = [&](const Poly<F>& p) {
    std::vector<G> c;
    for (const auto& a : p.coeffs()) c.push_back(fn(a));
    return Poly<G>(like, std::move(c));
  };
  return RationalFunction<G>(lift(f.num()), lift(f.den()));
}

template <class G, class F, class Fn>
RationalMap<G> map_coefficients(const RationalMap<F>& m, const G& like, Fn fn) {
  return {m.source.map_coefficients(fn),
          m.target.map_coefficients(fn),
          map_coefficients(m.x_map, like, fn),
          map_coefficients(m.y_coeff, like, fn),
          map_coefficients(m.y_const, like, fn),
          m.degree,
          m.kind};
}

/// (x, y) |-> (u^2 x + r, u^3 y + s u^2 x + t) from E1 to the curve E2 it
/// produces; E2 is computed from E1 and (u, r, s, t).
template <class F>
RationalMap<F> weierstrass_isomorphism(const WeierstrassCurve<F>& E1, const F& u, const F& r, const F& s,
                                       const F& t) {
  if (u.is_zero()) throw ArgumentError("isomorphism with u = 0");
  // Inverse substitution (u', r', s', t') expressing E1 coordinates in E2's.
  const F ui = u.inverse();
  const F U = ui;
  const F R = -r * ui * ui;
  const F S = -s * ui;
  const F T = (r * s - t) * ui * ui * ui;
  // Standard table: E2 = E1 changed by x = U^2 x' + R, y = U^3 y' + S U^2 x' + T.
  const F& a1 = E1.a1();
  const F& a2 = E1.a2();
  const F& a3 = E1.a3();
  const F& a4 = E1.a4();
  const F& a6 = E1.a6();
  const F two = u.constant(2L);
  const F three = u.constant(3L);
  const F U2 = U * U;
  const F U3 = U2 * U;
  const F U4 = U2 * U2;
  const F U6 = U3 * U3;
  const F b1 = (a1 + two * S) / U;
  const F b2 = (a2 - S * a1 + three * R - S * S) / U2;
  const F b3 = (a3 + R * a1 + two * T) / U3;
  const F b4 = (a4 - S * a3 + two * R * a2 - (T + R * S) * a1 + three * R * R - two * S * T) / U4;
  const F b6 = (a6 + R * a4 + R * R * a2 + R * R * R - T * a3 - T * T - R * T * a1) / U6;
  WeierstrassCurve<F> E2(b1, b2, b3, b4, b6);
  const F& zero = u.zero_like();
  using RF = RationalFunction<F>;
  return {E1,
          E2,
          RF(Poly<F>(zero, {r, u * u})),
          RF(Poly<F>::constant(u * u * u)),
          RF(Poly<F>(zero, {t, s * u * u})),
          Int(1),
          MapKind::isomorphism};
}

}  // namespace ssddh
