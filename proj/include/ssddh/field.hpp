#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ssddh/integer.hpp"

namespace ssddh {

class FieldDesc;
using FieldPtr = std::shared_ptr<const FieldDesc>;

/// Describes F_{p^m} = F_p[t]/(modulus). Immutable once built.
///
/// The canonical modulus of degree m is the monic irreducible polynomial whose
/// lower coefficients (c_0, ..., c_{m-1}) are smallest when read as the base-p
/// integer sum c_i p^i. For m = 1 this is t itself, so F_p elements are plain
/// residues.
class FieldDesc {
 public:
  static FieldPtr prime(const Int& p);
  static FieldPtr extension(const Int& p, unsigned m);
  // Validates primality of p and irreducibility of the monic modulus.
  static FieldPtr with_modulus(const Int& p, std::vector<Int> modulus);

  const Int& characteristic() const { return p_; }
  unsigned degree() const { return static_cast<unsigned>(modulus_.size() - 1); }
  // Little-endian, monic, length degree() + 1.
  const std::vector<Int>& modulus() const { return modulus_; }
  // p^m
  const Int& order() const { return order_; }

  bool operator==(const FieldDesc& other) const {
    return p_ == other.p_ && modulus_ == other.modulus_;
  }

  std::string to_string() const;

 private:
  FieldDesc(Int p, std::vector<Int> modulus);

  Int p_;
  std::vector<Int> modulus_;
  Int order_;
};

bool same_field(const FieldPtr& a, const FieldPtr& b);

/// Element of F_{p^m} on the power basis of its field's modulus.
class FieldElement {
 public:
  FieldElement() = default;

  static FieldElement zero(const FieldPtr& f);
  static FieldElement one(const FieldPtr& f);
  static FieldElement from_int(const FieldPtr& f, const Int& n);
  // Coefficients are reduced mod p; missing high coefficients are zero.
  static FieldElement from_coeffs(const FieldPtr& f, std::vector<Int> coeffs);
  // The class of t in F_p[t]/(modulus).
  static FieldElement generator(const FieldPtr& f);
  // Element whose coefficient vector is the base-p digit expansion of index.
  static FieldElement from_index(const FieldPtr& f, Int index);

  const FieldPtr& field() const { return field_; }
  const std::vector<Int>& coeffs() const { return c_; }
  const Int& characteristic() const { return field_->characteristic(); }
  // Order of the field this element lives in.
  const Int& field_order() const { return field_->order(); }

  bool is_zero() const;
  bool is_one() const;
  // True when the element lies in the prime subfield.
  bool in_prime_field() const;

  FieldElement zero_like() const { return zero(field_); }
  FieldElement one_like() const { return one(field_); }
  FieldElement constant(const Int& n) const { return from_int(field_, n); }
  FieldElement constant(long n) const { return from_int(field_, Int(n)); }

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  // Throws ArgumentError on zero.
  FieldElement inverse() const;
  // Negative exponents invert first.
  FieldElement pow(const Int& e) const;

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  FieldElement(FieldPtr f, std::vector<Int> c) : field_(std::move(f)), c_(std::move(c)) {}
  void check_same(const FieldElement& o) const;

  FieldPtr field_;
  std::vector<Int> c_;
};

// Total order on coefficient vectors, c_0 compared first.
bool lex_less(const FieldElement& a, const FieldElement& b);

// Some y with y^2 = x, or nullopt. Characteristic 2 uses the inverse of
// squaring.
std::optional<FieldElement> sqrt(const FieldElement& x);

// x^(q^e), with q a power of the characteristic.
FieldElement frobenius(const FieldElement& x, const Int& q, unsigned e = 1);

// Absolute trace to F_p, returned as an F_p residue.
Int absolute_trace(const FieldElement& x);

}  // namespace ssddh
