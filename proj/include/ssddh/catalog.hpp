#pragma once

#include <string>
#include <vector>

#include "ssddh/distortion.hpp"
#include "ssddh/quadratic.hpp"

namespace ssddh {

struct CatalogFamily {
  std::string id;
  std::string condition;  // admissibility of p
  std::string curve;
  std::string map;
  std::string params;  // meaning of the extra integer parameters
};

const std::vector<CatalogFamily>& catalog_families();

// Instantiates a distortion-map family at characteristic p. params override
// the family defaults (see CatalogFamily::params); ArgumentError names the
// violated admissibility condition.
DistortionSpec builtin_distortion(const std::string& family, const Int& p, const std::vector<Int>& params = {});

// Characteristic-zero endomorphisms of the two CM examples, kept exact over
// Q(sqrt D): isogeny first, closing isomorphism second.
struct CmExample {
  std::string id;  // "D-8" or "D-7"
  long D;          // squarefree part generating the CM field
  RationalMap<QuadNumber> isogeny;
  RationalMap<QuadNumber> isomorphism;
  RationalMap<QuadNumber> composite;
};

CmExample cm_example(const std::string& id);

// a + b sqrt(D) |-> a + b * sqrt_d in the field of sqrt_d. Throws
// ArgumentError when a denominator vanishes mod p.
FieldElement reduce_quadratic(const QuadNumber& z, const FieldElement& sqrt_d);

// The CM example reduced at an inert prime p: the curve over F_p and the
// composite map over F_{p^2}. Split or ramified p raises ArgumentError
// "reduction not supersingular".
DistortionSpec cm_reduce(const std::string& id, const Int& p);

}  // namespace ssddh
