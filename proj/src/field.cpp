#include "ssddh/field.hpp"

#include <algorithm>

#include "ssddh/errors.hpp"

namespace ssddh {

namespace {

// Dense polynomials over F_p as little-endian residue vectors. Used for the
// representation layer only; user-facing polynomials live in poly.hpp.
using Raw = std::vector<Int>;

void trim(Raw& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Raw raw_mul(const Raw& a, const Raw& b, const Int& p) {
  if (a.empty() || b.empty()) return {};
  Raw out(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  for (auto& c : out) c = mod(c, p);
  trim(out);
  return out;
}

// a mod f for monic f.
Raw raw_rem(Raw a, const Raw& f, const Int& p) {
  const size_t m = f.size() - 1;
  for (size_t i = a.size(); i-- > m;) {
    Int c = mod(a[i], p);
    if (c == 0) continue;
    for (size_t j = 0; j <= m; ++j) a[i - m + j] -= c * f[j];
  }
  if (a.size() > m) a.resize(m);
  for (auto& c : a) c = mod(c, p);
  trim(a);
  return a;
}

Raw raw_powmod(Raw base, Int e, const Raw& f, const Int& p) {
  Raw acc{Int(1)};
  base = raw_rem(std::move(base), f, p);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) acc = raw_rem(raw_mul(acc, base, p), f, p);
    e >>= 1;
    if (e > 0) base = raw_rem(raw_mul(base, base, p), f, p);
  }
  return acc;
}

// Remainder for a general (non-monic) divisor.
Raw raw_rem_general(Raw a, const Raw& b, const Int& p) {
  trim(a);
  const Int lead_inv = inverse_mod(b.back(), p);
  while (a.size() >= b.size()) {
    Int c = mod(a.back() * lead_inv, p);
    const size_t shift = a.size() - b.size();
    for (size_t j = 0; j < b.size(); ++j) a[shift + j] = mod(a[shift + j] - c * b[j], p);
    trim(a);
  }
  return a;
}

Raw raw_gcd(Raw a, Raw b, const Int& p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Raw r = raw_rem_general(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool raw_irreducible(const Raw& f, const Int& p) {
  const size_t m = f.size() - 1;
  if (m == 1) return true;
  if (f[0] == 0) return false;
  Raw x{Int(0), Int(1)};
  Raw h = x;
  for (size_t i = 1; i <= m / 2; ++i) {
    h = raw_powmod(h, p, f, p);
    Raw diff = h;
    diff.resize(std::max<size_t>(diff.size(), 2), Int(0));
    diff[1] = mod(diff[1] - 1, p);
    trim(diff);
    Raw g = raw_gcd(f, diff, p);
    if (g.size() > 1) return false;
  }
  return true;
}

// Extended Euclid inverse of a modulo the monic f.
Raw raw_inverse(const Raw& a, const Raw& f, const Int& p) {
  Raw r0 = f, r1 = a;
  Raw s0{}, s1{Int(1)};
  trim(r1);
  while (!r1.empty()) {
    // q = r0 / r1
    Raw q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, Int(0));
    Raw rem = r0;
    const Int lead_inv = inverse_mod(r1.back(), p);
    while (rem.size() >= r1.size()) {
      Int c = mod(rem.back() * lead_inv, p);
      const size_t shift = rem.size() - r1.size();
      q[shift] = c;
      for (size_t j = 0; j < r1.size(); ++j) rem[shift + j] = mod(rem[shift + j] - c * r1[j], p);
      trim(rem);
    }
    Raw qs = raw_mul(q, s1, p);
    Raw s2(std::max(s0.size(), qs.size()), Int(0));
    for (size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
    for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    for (auto& c : s2) c = mod(c, p);
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant when gcd(a, f) = 1.
  if (r0.size() != 1) throw ArgumentError("element is not invertible");
  const Int c = inverse_mod(r0[0], p);
  for (auto& x : s0) x = mod(x * c, p);
  return s0;
}

}  // namespace

// ---------------------------------------------------------------- FieldDesc

FieldDesc::FieldDesc(Int p, std::vector<Int> modulus)
    : p_(std::move(p)), modulus_(std::move(modulus)) {
  order_ = ipow(p_, degree());
}

FieldPtr FieldDesc::prime(const Int& p) { return extension(p, 1); }

FieldPtr FieldDesc::extension(const Int& p, unsigned m) {
  if (!is_prime(p)) throw ArgumentError("field characteristic " + ssddh::to_string(p) + " is not prime");
  if (m == 0) throw ArgumentError("extension degree must be at least 1");
  if (m == 1) return FieldPtr(new FieldDesc(p, {Int(0), Int(1)}));
  // Walk monic candidates in increasing base-p value of the lower coefficients.
  for (Int index = 1;; ++index) {
    Raw f(m + 1, Int(0));
    Int rest = index;
    for (unsigned i = 0; i < m; ++i) {
      f[i] = mod(rest, p);
      rest /= p;
    }
    if (rest != 0) break;
    f[m] = 1;
    if (raw_irreducible(f, p)) return FieldPtr(new FieldDesc(p, std::move(f)));
  }
  throw InternalError("no irreducible polynomial found");
}

FieldPtr FieldDesc::with_modulus(const Int& p, std::vector<Int> modulus) {
  if (!is_prime(p)) throw ArgumentError("field characteristic " + ssddh::to_string(p) + " is not prime");
  for (auto& c : modulus) c = mod(c, p);
  trim(modulus);
  if (modulus.size() < 2) throw ArgumentError("field modulus must have degree at least 1");
  if (modulus.back() != 1) throw ArgumentError("field modulus must be monic");
  if (!raw_irreducible(modulus, p)) throw ArgumentError("field modulus is reducible over F_p");
  return FieldPtr(new FieldDesc(p, std::move(modulus)));
}

std::string FieldDesc::to_string() const {
  std::string s = "F_" + ssddh::to_string(p_);
  if (degree() > 1) s += "^" + std::to_string(degree());
  return s;
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

// ------------------------------------------------------------- FieldElement

FieldElement FieldElement::zero(const FieldPtr& f) {
  return FieldElement(f, std::vector<Int>(f->degree(), Int(0)));
}

FieldElement FieldElement::one(const FieldPtr& f) { return from_int(f, 1); }

FieldElement FieldElement::from_int(const FieldPtr& f, const Int& n) {
  std::vector<Int> c(f->degree(), Int(0));
  c[0] = mod(n, f->characteristic());
  return FieldElement(f, std::move(c));
}

FieldElement FieldElement::from_coeffs(const FieldPtr& f, std::vector<Int> coeffs) {
  const Int& p = f->characteristic();
  for (auto& c : coeffs) c = mod(c, p);
  Raw r = raw_rem(std::move(coeffs), f->modulus(), p);
  r.resize(f->degree(), Int(0));
  return FieldElement(f, std::move(r));
}

FieldElement FieldElement::generator(const FieldPtr& f) {
  return from_coeffs(f, {Int(0), Int(1)});
}

FieldElement FieldElement::from_index(const FieldPtr& f, Int index) {
  std::vector<Int> c(f->degree(), Int(0));
  for (auto& x : c) {
    x = mod(index, f->characteristic());
    index /= f->characteristic();
  }
  return FieldElement(f, std::move(c));
}

bool FieldElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Int& x) { return x == 0; });
}

bool FieldElement::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](const Int& x) { return x == 0; });
}

bool FieldElement::in_prime_field() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](const Int& x) { return x == 0; });
}

void FieldElement::check_same(const FieldElement& o) const {
  if (!field_ || !o.field_) throw ArgumentError("operation on an uninitialised field element");
  if (!same_field(field_, o.field_)) {
    throw ArgumentError("field elements from different fields: " + field_->to_string() + " vs " +
                        o.field_->to_string());
  }
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  const Int& p = characteristic();
  for (auto& x : r.c_)
    if (x != 0) x = p - x;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  check_same(o);
  const Int& p = characteristic();
  for (size_t i = 0; i < c_.size(); ++i) {
    c_[i] += o.c_[i];
    if (c_[i] >= p) c_[i] -= p;
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  check_same(o);
  const Int& p = characteristic();
  for (size_t i = 0; i < c_.size(); ++i) {
    c_[i] -= o.c_[i];
    if (c_[i] < 0) c_[i] += p;
  }
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  check_same(o);
  const Int& p = characteristic();
  const size_t m = c_.size();
  if (m == 1) {
    c_[0] = mod(c_[0] * o.c_[0], p);
    return *this;
  }
  Raw prod(2 * m - 1, Int(0));
  for (size_t i = 0; i < m; ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < m; ++j) {
      if (o.c_[j] == 0) continue;
      mpz_addmul(prod[i + j].get_mpz_t(), c_[i].get_mpz_t(), o.c_[j].get_mpz_t());
    }
  }
  const Raw& f = field_->modulus();
  for (size_t i = prod.size(); i-- > m;) {
    Int c = mod(prod[i], p);
    if (c == 0) continue;
    for (size_t j = 0; j < m; ++j) mpz_submul(prod[i - m + j].get_mpz_t(), c.get_mpz_t(), f[j].get_mpz_t());
  }
  for (size_t i = 0; i < m; ++i) c_[i] = mod(prod[i], p);
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) { return *this *= o.inverse(); }

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw ArgumentError("division by zero in " + field_->to_string());
  const Int& p = characteristic();
  if (c_.size() == 1) return FieldElement(field_, {inverse_mod(c_[0], p)});
  Raw a = c_;
  trim(a);
  Raw inv = raw_inverse(a, field_->modulus(), p);
  inv.resize(c_.size(), Int(0));
  return FieldElement(field_, std::move(inv));
}

FieldElement FieldElement::pow(const Int& e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElement acc = one_like();
  FieldElement base = *this;
  const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    acc *= acc;
    if (mpz_tstbit(e.get_mpz_t(), i)) acc *= base;
  }
  return acc;
}

bool FieldElement::operator==(const FieldElement& o) const {
  if (!same_field(field_, o.field_)) return false;
  return c_ == o.c_;
}

std::string FieldElement::to_string() const {
  std::string s;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!s.empty()) s += " + ";
    if (i == 0) {
      s += ssddh::to_string(c_[i]);
    } else {
      if (c_[i] != 1) s += ssddh::to_string(c_[i]) + "*";
      s += "t";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

bool lex_less(const FieldElement& a, const FieldElement& b) {
  return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(),
                                      b.coeffs().end());
}

std::optional<FieldElement> sqrt(const FieldElement& x) {
  if (x.is_zero()) return x;
  const Int& Q = x.field_order();
  if (x.characteristic() == 2) return x.pow(Q / 2);
  const Int qm1 = Q - 1;
  if (!x.pow(qm1 / 2).is_one()) return std::nullopt;
  // Tonelli-Shanks over F_Q.
  Int t = qm1;
  unsigned s = 0;
  while (mpz_even_p(t.get_mpz_t())) {
    t >>= 1;
    ++s;
  }
  FieldElement z;
  for (Int idx = 2;; ++idx) {
    z = FieldElement::from_index(x.field(), idx);
    if (!z.pow(qm1 / 2).is_one()) break;
  }
  FieldElement c = z.pow(t);
  FieldElement r = x.pow((t + 1) / 2);
  FieldElement u = x.pow(t);
  unsigned m = s;
  while (!u.is_one()) {
    unsigned i = 0;
    FieldElement u2 = u;
    while (!u2.is_one()) {
      u2 *= u2;
      ++i;
    }
    FieldElement b = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) b *= b;
    r *= b;
    c = b * b;
    u *= c;
    m = i;
  }
  return r;
}

FieldElement frobenius(const FieldElement& x, const Int& q, unsigned e) {
  FieldElement r = x;
  for (unsigned i = 0; i < e; ++i) r = r.pow(q);
  return r;
}

Int absolute_trace(const FieldElement& x) {
  FieldElement acc = x;
  FieldElement cur = x;
  const Int& p = x.characteristic();
  for (unsigned i = 1; i < x.field()->degree(); ++i) {
    cur = cur.pow(p);
    acc += cur;
  }
  return acc.coeffs()[0];
}

}  // namespace ssddh
