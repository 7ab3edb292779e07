#pragma once

#include "ssddh/curve_ff.hpp"

namespace ssddh {

enum class PairingKind { weil, tate };
const char* to_string(PairingKind k);
PairingKind parse_pairing_kind(const std::string& s);

// Retries with a fresh auxiliary point before a degenerate evaluation is
// reported as InternalError.
constexpr int kPairingRetries = 8;

// Miller function f_{n,P} (divisor n(P) - n(0_E), normalized at infinity)
// evaluated at Q; nullopt when a line or vertical vanishes at Q.
std::optional<FieldElement> miller(const Curve& E, const CurvePoint& P, const CurvePoint& Q, const Int& n);

// E must be defined over the field holding the coordinates of P and Q.
FieldElement weil_pairing(const Curve& E, const CurvePoint& P, const CurvePoint& Q, const Int& r);

// Reduced Tate pairing f_{r,P}(Q)^((|F| - 1) / r) over the coordinate field F.
FieldElement tate_pairing(const Curve& E, const CurvePoint& P, const CurvePoint& Q, const Int& r);

FieldElement pairing(PairingKind kind, const Curve& E, const CurvePoint& P, const CurvePoint& Q, const Int& r);

// R in <P>, decided with the Weil pairing.
bool subgroup_membership(const Curve& E, const CurvePoint& P, const CurvePoint& R, const Int& r);

// Multiplicative order of a root of unity z with z^r = 1, r prime: 1 or r.
bool is_primitive_rth_root(const FieldElement& z, const Int& r);

}  // namespace ssddh
