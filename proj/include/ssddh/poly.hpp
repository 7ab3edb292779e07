#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ssddh/errors.hpp"
#include "ssddh/integer.hpp"

namespace ssddh {

/// Dense univariate polynomial over any exact field type F.
///
/// F must provide the field operators, is_zero(), zero_like(), one_like() and
/// constant(Int). Trailing zeros are always stripped; the zero polynomial has
/// degree -1, which stands in for -infinity.
template <class F>
class Poly {
 public:
  explicit Poly(const F& like) : zero_(like.zero_like()) {}
  Poly(const F& like, std::vector<F> coeffs) : zero_(like.zero_like()), c_(std::move(coeffs)) {
    normalize();
  }

  static Poly constant(const F& c) { return Poly(c, {c}); }
  static Poly x(const F& like) { return Poly(like, {like.zero_like(), like.one_like()}); }
  static Poly monomial(const F& c, size_t degree) {
    std::vector<F> v(degree + 1, c.zero_like());
    v[degree] = c;
    return Poly(c, std::move(v));
  }
  // prod (x - r) over the given roots.
  static Poly from_roots(const F& like, const std::vector<F>& roots) {
    Poly acc = constant(like.one_like());
    for (const auto& r : roots) acc *= Poly(like, {-r, like.one_like()});
    return acc;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<F>& coeffs() const { return c_; }
  const F& coeff(size_t i) const { return i < c_.size() ? c_[i] : zero_; }
  const F& leading() const { return c_.empty() ? zero_ : c_.back(); }
  const F& zero_element() const { return zero_; }

  F operator()(const F& x) const {
    F acc = zero_;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  Poly derivative() const {
    std::vector<F> d;
    for (size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * zero_.constant(Int(static_cast<unsigned long>(i))));
    return Poly(zero_, std::move(d));
  }

  Poly monic() const {
    if (is_zero()) return *this;
    const F inv = F(zero_.one_like()) / leading();
    return *this * inv;
  }

  Poly operator-() const {
    std::vector<F> v;
    v.reserve(c_.size());
    for (const auto& a : c_) v.push_back(-a);
    return Poly(zero_, std::move(v));
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_);
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_);
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const F& s) {
    for (auto& a : c_) a *= s;
    normalize();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const F& s) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.zero_);
    std::vector<F> v(a.c_.size() + b.c_.size() - 1, a.zero_);
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(a.zero_, std::move(v));
  }

  // Euclidean division; throws on a zero divisor.
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.is_zero()) throw ArgumentError("polynomial division by zero");
    if (degree() < d.degree()) return {Poly(zero_), *this};
    const F lead_inv = F(zero_.one_like()) / d.leading();
    std::vector<F> rem = c_;
    std::vector<F> q(c_.size() - d.c_.size() + 1, zero_);
    for (size_t k = q.size(); k-- > 0;) {
      const size_t i = k + d.c_.size() - 1;
      if (rem[i].is_zero()) continue;
      const F c = rem[i] * lead_inv;
      q[k] = c;
      for (size_t j = 0; j < d.c_.size(); ++j) rem[k + j] -= c * d.c_[j];
    }
    rem.resize(d.c_.size() - 1, zero_);
    return {Poly(zero_, std::move(q)), Poly(zero_, std::move(rem))};
  }
  friend Poly operator/(const Poly& a, const Poly& b) { return a.divmod(b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return a.divmod(b).second; }

  // this^e mod m
  Poly powmod(Int e, const Poly& m) const {
    Poly acc = constant(zero_.one_like()) % m;
    Poly base = *this % m;
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) acc = (acc * base) % m;
      e >>= 1;
      if (e > 0) base = (base * base) % m;
    }
    return acc;
  }

  Poly pow(unsigned long e) const {
    Poly acc = constant(zero_.one_like());
    Poly base = *this;
    while (e) {
      if (e & 1) acc *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return acc;
  }

  // this(inner(x))
  Poly compose(const Poly& inner) const {
    Poly acc(zero_);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * inner + constant(c_[i]);
    return acc;
  }

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  std::string to_string(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = c_.size(); i-- > 0;) {
      if (c_[i].is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += "(" + c_[i].to_string() + ")";
      if (i > 0) s += "*" + var + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return s;
  }

 private:
  void normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  F zero_;
  std::vector<F> c_;
};

// Monic gcd; gcd(0, 0) = 0.
template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    Poly<F> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace ssddh
