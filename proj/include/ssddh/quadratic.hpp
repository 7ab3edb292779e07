#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ssddh/integer.hpp"
#include "ssddh/poly.hpp"

namespace ssddh {

using Rational = mpq_class;

/// a + b*sqrt(D) in the quadratic field Q(sqrt(D)), D squarefree and != 1.
///
/// Used for the characteristic-0 CM examples; satisfies the same field
/// interface as FieldElement so the generic curve and isogeny code applies.
class QuadNumber {
 public:
  QuadNumber() = default;
  QuadNumber(long D, Rational a, Rational b = 0);

  static QuadNumber sqrt_d(long D) { return QuadNumber(D, 0, 1); }

  long d() const { return d_; }
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_one() const { return a_ == 1 && b_ == 0; }
  QuadNumber zero_like() const { return QuadNumber(d_, 0); }
  QuadNumber one_like() const { return QuadNumber(d_, 1); }
  QuadNumber constant(const Int& n) const { return QuadNumber(d_, Rational(n)); }
  QuadNumber constant(long n) const { return QuadNumber(d_, Rational(n)); }
  static Int characteristic() { return 0; }

  QuadNumber conjugate() const { return QuadNumber(d_, a_, -b_); }
  Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

  QuadNumber operator-() const { return QuadNumber(d_, -a_, -b_); }
  QuadNumber& operator+=(const QuadNumber& o);
  QuadNumber& operator-=(const QuadNumber& o);
  QuadNumber& operator*=(const QuadNumber& o);
  QuadNumber& operator/=(const QuadNumber& o) { return *this *= o.inverse(); }
  friend QuadNumber operator+(QuadNumber x, const QuadNumber& y) { return x += y; }
  friend QuadNumber operator-(QuadNumber x, const QuadNumber& y) { return x -= y; }
  friend QuadNumber operator*(QuadNumber x, const QuadNumber& y) { return x *= y; }
  friend QuadNumber operator/(QuadNumber x, const QuadNumber& y) { return x /= y; }

  QuadNumber inverse() const;

  bool operator==(const QuadNumber& o) const { return d_ == o.d_ && a_ == o.a_ && b_ == o.b_; }
  bool operator!=(const QuadNumber& o) const { return !(*this == o); }

  // "a + b*sqrt(D)" with rationals in lowest terms.
  std::string to_string() const;

 private:
  void check_same(const QuadNumber& o) const;

  long d_ = -1;
  Rational a_;
  Rational b_;
};

// Compares (a, b) lexicographically.
bool lex_less(const QuadNumber& x, const QuadNumber& y);

std::optional<QuadNumber> sqrt(const QuadNumber& x);

// Roots in Q(sqrt D) of polynomials of degree <= 2 and of binomials
// x^n - c with n in {2, 4}; anything else raises CapabilityError.
std::vector<QuadNumber> poly_roots(const Poly<QuadNumber>& f);

}  // namespace ssddh
