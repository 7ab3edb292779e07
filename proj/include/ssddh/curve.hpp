#pragma once

#include <array>
#include <string>
#include <utility>

#include "ssddh/errors.hpp"
#include "ssddh/integer.hpp"

namespace ssddh {

// Affine point or the identity 0_E. Coordinates are meaningful only relative
// to the curve used to operate on them.
template <class F>
class Point {
 public:
  Point() = default;
  Point(F x, F y) : inf_(false), x_(std::move(x)), y_(std::move(y)) {}
  static Point identity() { return Point(); }

  bool is_identity() const { return inf_; }
  const F& x() const { return x_; }
  const F& y() const { return y_; }

  bool operator==(const Point& o) const {
    if (inf_ || o.inf_) return inf_ == o.inf_;
    return x_ == o.x_ && y_ == o.y_;
  }
  bool operator!=(const Point& o) const { return !(*this == o); }

  std::string to_string() const {
    return inf_ ? "0_E" : "(" + x_.to_string() + ", " + y_.to_string() + ")";
  }

 private:
  bool inf_ = true;
  F x_;
  F y_;
};

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over an exact field F.
/// Construction rejects singular models.
template <class F>
class WeierstrassCurve {
 public:
  WeierstrassCurve(F a1, F a2, F a3, F a4, F a6)
      : a_{std::move(a1), std::move(a2), std::move(a3), std::move(a4), std::move(a6)} {
    if (discriminant().is_zero()) throw ArgumentError("singular Weierstrass model");
  }

  const F& a1() const { return a_[0]; }
  const F& a2() const { return a_[1]; }
  const F& a3() const { return a_[2]; }
  const F& a4() const { return a_[3]; }
  const F& a6() const { return a_[4]; }
  const std::array<F, 5>& coefficients() const { return a_; }
  F zero() const { return a_[0].zero_like(); }

  F b2() const { return a1() * a1() + c(4) * a2(); }
  F b4() const { return c(2) * a4() + a1() * a3(); }
  F b6() const { return a3() * a3() + c(4) * a6(); }
  F b8() const {
    return a1() * a1() * a6() + c(4) * a2() * a6() - a1() * a3() * a4() + a2() * a3() * a3() -
           a4() * a4();
  }
  F c4() const { return b2() * b2() - c(24) * b4(); }
  F c6() const { return -b2() * b2() * b2() + c(36) * b2() * b4() - c(216) * b6(); }
  F discriminant() const {
    const F B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
    return -B2 * B2 * B8 - c(8) * B4 * B4 * B4 - c(27) * B6 * B6 + c(9) * B2 * B4 * B6;
  }
  F j_invariant() const {
    const F C4 = c4();
    return C4 * C4 * C4 / discriminant();
  }

  bool contains(const Point<F>& P) const {
    if (P.is_identity()) return true;
    const F& x = P.x();
    const F& y = P.y();
    return y * y + a1() * x * y + a3() * y == ((x + a2()) * x + a4()) * x + a6();
  }

  Point<F> negate(const Point<F>& P) const {
    if (P.is_identity()) return P;
    return Point<F>(P.x(), -P.y() - a1() * P.x() - a3());
  }

  Point<F> add(const Point<F>& P, const Point<F>& Q) const {
    if (P.is_identity()) return Q;
    if (Q.is_identity()) return P;
    F lambda;
    F nu;
    if (P.x() == Q.x()) {
      const F denom = P.y() + Q.y() + a1() * Q.x() + a3();
      if (denom.is_zero()) return Point<F>::identity();
      const F& x = P.x();
      lambda = (c(3) * x * x + c(2) * a2() * x + a4() - a1() * P.y()) / denom;
      nu = (-x * x * x + a4() * x + c(2) * a6() - a3() * P.y()) / denom;
    } else {
      const F dx = Q.x() - P.x();
      lambda = (Q.y() - P.y()) / dx;
      nu = (P.y() * Q.x() - Q.y() * P.x()) / dx;
    }
    const F x3 = lambda * lambda + a1() * lambda - a2() - P.x() - Q.x();
    const F y3 = -(lambda + a1()) * x3 - nu - a3();
    return Point<F>(x3, y3);
  }

  Point<F> sub(const Point<F>& P, const Point<F>& Q) const { return add(P, negate(Q)); }

  // Double-and-add; negative n negates.
  Point<F> mul(const Int& n, const Point<F>& P) const {
    Point<F> base = n < 0 ? negate(P) : P;
    Int e = abs(n);
    Point<F> acc = Point<F>::identity();
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) acc = add(acc, base);
      e >>= 1;
      if (e > 0) base = add(base, base);
    }
    return acc;
  }

  bool operator==(const WeierstrassCurve& o) const { return a_ == o.a_; }
  bool operator!=(const WeierstrassCurve& o) const { return !(*this == o); }

  std::string to_string() const {
    return "[" + a1().to_string() + ", " + a2().to_string() + ", " + a3().to_string() + ", " +
           a4().to_string() + ", " + a6().to_string() + "]";
  }

  // Applies f to every coefficient, e.g. to base-change along an embedding.
  template <class Fn>
  auto map_coefficients(Fn f) const -> WeierstrassCurve<decltype(f(std::declval<F>()))> {
    return {f(a1()), f(a2()), f(a3()), f(a4()), f(a6())};
  }

 private:
  F c(long n) const { return a_[0].constant(n); }

  std::array<F, 5> a_;
};

}  // namespace ssddh
