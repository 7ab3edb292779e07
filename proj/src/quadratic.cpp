#include "ssddh/quadratic.hpp"

#include <algorithm>

#include "ssddh/errors.hpp"

namespace ssddh {

namespace {

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  Int n = q.get_num();
  Int d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  Int rn;
  Int rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

}  // namespace

QuadNumber::QuadNumber(long D, Rational a, Rational b) : d_(D), a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
}

void QuadNumber::check_same(const QuadNumber& o) const {
  if (d_ != o.d_) throw ArgumentError("mixing elements of different quadratic fields");
}

QuadNumber& QuadNumber::operator+=(const QuadNumber& o) {
  check_same(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadNumber& QuadNumber::operator-=(const QuadNumber& o) {
  check_same(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadNumber& QuadNumber::operator*=(const QuadNumber& o) {
  check_same(o);
  Rational a = a_ * o.a_ + Rational(d_) * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadNumber QuadNumber::inverse() const {
  if (is_zero()) throw ArgumentError("inverse of zero");
  const Rational n = norm();
  return QuadNumber(d_, a_ / n, -b_ / n);
}

std::string QuadNumber::to_string() const {
  if (b_ == 0) return a_.get_str();
  std::string s = a_ == 0 ? "" : a_.get_str() + " + ";
  return s + "(" + b_.get_str() + ")*sqrt(" + std::to_string(d_) + ")";
}

bool lex_less(const QuadNumber& x, const QuadNumber& y) {
  if (x.a() != y.a()) return x.a() < y.a();
  return x.b() < y.b();
}

std::optional<QuadNumber> sqrt(const QuadNumber& x) {
  const long D = x.d();
  if (x.b() == 0) {
    if (auto r = rational_sqrt(x.a())) return QuadNumber(D, *r);
    if (auto r = rational_sqrt(x.a() / Rational(D))) return QuadNumber(D, 0, *r);
    return std::nullopt;
  }
  // (u + v sqrt D)^2 = x  =>  u^2 = (a +- sqrt(N(x))) / 2, v = b / (2u).
  auto n = rational_sqrt(x.norm());
  if (!n) return std::nullopt;
  for (const Rational& cand : {Rational((x.a() + *n) / 2), Rational((x.a() - *n) / 2)}) {
    auto u = rational_sqrt(cand);
    if (!u || *u == 0) continue;
    return QuadNumber(D, *u, x.b() / (2 * *u));
  }
  return std::nullopt;
}

namespace {

void push_sqrts(const QuadNumber& c, std::vector<QuadNumber>& out) {
  if (auto r = sqrt(c)) {
    out.push_back(*r);
    out.push_back(-*r);
  }
}

}  // namespace

std::vector<QuadNumber> poly_roots(const Poly<QuadNumber>& f) {
  if (f.is_zero()) throw ArgumentError("poly_roots: zero polynomial");
  std::vector<QuadNumber> out;
  const Poly<QuadNumber> g = f.monic();
  const int n = g.degree();
  bool binomial = n > 0;
  for (int i = 1; i < n; ++i) binomial = binomial && g.coeff(i).is_zero();
  if (n == 1) {
    out.push_back(-g.coeff(0));
  } else if (n == 2) {
    // x^2 + bx + c: (-b +- sqrt(b^2 - 4c)) / 2
    const QuadNumber& b = g.coeff(1);
    const QuadNumber disc = b * b - g.coeff(0) * b.constant(4L);
    std::vector<QuadNumber> s;
    push_sqrts(disc, s);
    for (const auto& r : s) out.push_back((r - b) / b.constant(2L));
  } else if (binomial && n == 4) {
    std::vector<QuadNumber> s;
    push_sqrts(-g.coeff(0), s);
    for (const auto& r : s) push_sqrts(r, out);
  } else if (n > 0) {
    throw CapabilityError("root finding over Q(sqrt D) limited to degree 2 and x^4 - c");
  }
  std::sort(out.begin(), out.end(), [](const QuadNumber& a, const QuadNumber& b) { return lex_less(a, b); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace ssddh
