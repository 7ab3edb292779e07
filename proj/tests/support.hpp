#pragma once

#include <cmath>
#include <map>
#include <vector>

#include "ssddh/curve_ff.hpp"

namespace ssddh::testing {

inline FieldElement random_element(const FieldPtr& F, Rng& rng) { return FieldElement::from_index(F, rng.below(F->order())); }

inline std::vector<FieldElement> all_elements(const FieldPtr& F) {
  std::vector<FieldElement> out;
  for (Int i = 0; i < F->order(); ++i) out.push_back(FieldElement::from_index(F, i));
  return out;
}

// Baby-step giant-step discrete log of Q to base P in a group of order r.
inline std::optional<Int> bsgs(const Curve& E, const CurvePoint& P, const CurvePoint& Q, const Int& r) {
  const unsigned long m = static_cast<unsigned long>(std::ceil(std::sqrt(r.get_d()))) + 1;
  std::map<std::string, unsigned long> baby;
  CurvePoint acc = CurvePoint::identity();
  for (unsigned long j = 0; j < m; ++j) {
    baby.emplace(acc.to_string(), j);
    acc = E.add(acc, P);
  }
  const CurvePoint giant = E.negate(E.mul(Int(m), P));
  CurvePoint gamma = Q;
  for (unsigned long i = 0; i <= m; ++i) {
    if (auto it = baby.find(gamma.to_string()); it != baby.end()) return mod(Int(i * m + it->second), r);
    gamma = E.add(gamma, giant);
  }
  return std::nullopt;
}

// Every multiple of P, identity included.
inline std::vector<CurvePoint> multiples(const Curve& E, const CurvePoint& P, const Int& r) {
  std::vector<CurvePoint> out{CurvePoint::identity()};
  for (Int i = 1; i < r; ++i) out.push_back(E.add(out.back(), P));
  return out;
}

}  // namespace ssddh::testing
