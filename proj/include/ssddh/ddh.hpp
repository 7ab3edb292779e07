#pragma once

#include <optional>
#include <string>

#include "ssddh/distortion.hpp"

namespace ssddh {

struct DdhVerdict {
  bool valid = false;
  std::string method;  // "co-ddh", "trace" or "distortion"
  PairingKind pairing = PairingKind::weil;
};

// (P1, P2, Q1, Q2) with P2 = aP1: valid iff Q2 = aQ1. E is the curve over
// the coordinate field; <P1> != <Q1> is checked with the Weil pairing.
DdhVerdict solve_co_ddh(const Curve& E, const CurvePoint& P1, const CurvePoint& P2, const CurvePoint& Q1,
                        const CurvePoint& Q2, const Int& r, PairingKind kind = PairingKind::weil);

// (P1, P2, P3, P4) in a cyclic group <P1> of order r: valid iff it is a
// Diffie-Hellman tuple. Mixed subgroups go through the trace map; eigenspace
// subgroups need a distortion map.
DdhVerdict solve_ddh(const TorsionContext& ctx, const CurvePoint& P1, const CurvePoint& P2, const CurvePoint& P3,
                     const CurvePoint& P4, const DistortionSpec* hint = nullptr,
                     PairingKind kind = PairingKind::weil);

enum class SubgroupClass { easy_trace, easy_distortion, hard_ordinary_eigenspace, unsupported_k1 };
std::string to_string(SubgroupClass c);

SubgroupClass classify_subgroup(const Curve& E, const Int& order, const CurvePoint& P, const Int& r);

}  // namespace ssddh
