#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ssddh/field.hpp"
#include "ssddh/poly.hpp"

namespace ssddh {

using FqPoly = Poly<FieldElement>;

// Fields at or below this size are scanned exhaustively by poly_roots.
inline const Int kExhaustiveRootScanLimit = Int(1) << 16;

// Distinct roots of f in its coefficient field, sorted by lex_less.
// Throws ArgumentError for the zero polynomial.
std::vector<FieldElement> poly_roots(const FqPoly& f);

bool is_irreducible(const FqPoly& f);

// Distinct-degree factorization of a squarefree polynomial: pairs (d, g_d)
// where g_d is the product of all monic irreducible factors of degree d.
std::vector<std::pair<unsigned, FqPoly>> distinct_degree_factorization(const FqPoly& f);

/// Canonical embedding F_{p^a} -> F_{p^c} (a | c), sending the generator of the
/// source to the lex-smallest root of the source modulus in the target.
class Embedding {
 public:
  Embedding(const FieldPtr& from, const FieldPtr& to);
  // Embedding sending the source generator to image, which must be a root of
  // the source modulus.
  static Embedding with_image(const FieldPtr& from, const FieldPtr& to, const FieldElement& image);

  const FieldPtr& source() const { return from_; }
  const FieldPtr& target() const { return to_; }

  FieldElement lift(const FieldElement& x) const;
  FqPoly lift(const FqPoly& f) const;
  // Preimage of z, or nullopt when z is outside the image subfield.
  std::optional<FieldElement> restrict(const FieldElement& z) const;

 private:
  Embedding(const FieldPtr& from, const FieldPtr& to, const FieldElement& image);

  FieldPtr from_;
  FieldPtr to_;
  std::vector<FieldElement> powers_;  // image of t^i, i < deg(from)
};

// Images of the source generator under all embeddings from -> to, sorted.
std::vector<FieldElement> generator_images(const FieldPtr& from, const FieldPtr& to);

// Embedding mid -> top agreeing with base -> top on the image of base -> mid.
Embedding compatible_embedding(const Embedding& base_to_mid, const Embedding& base_to_top);

// Shorthand for the canonical F_{p^{m k}} over a field F_{p^m}.
FieldPtr extension_of(const FieldPtr& base, unsigned k);

}  // namespace ssddh
