#include "ssddh/ddh.hpp"

namespace ssddh {

namespace {

void check_point(const Curve& E, const CurvePoint& P, const Int& r, const char* name) {
  if (!E.contains(P) || !E.mul(r, P).is_identity()) {
    throw ArgumentError(std::string(name) + " is not an r-torsion point of the curve");
  }
}

}  // namespace

DdhVerdict solve_co_ddh(const Curve& E, const CurvePoint& P1, const CurvePoint& P2, const CurvePoint& Q1,
                        const CurvePoint& Q2, const Int& r, PairingKind kind) {
  if (P1.is_identity() || Q1.is_identity()) throw ArgumentError("co-DDH: first components must be nonzero");
  check_point(E, P1, r, "P1");
  check_point(E, P2, r, "P2");
  check_point(E, Q1, r, "Q1");
  check_point(E, Q2, r, "Q2");
  if (subgroup_membership(E, P1, Q1, r)) throw ArgumentError("co-DDH degenerate: G1 = G2");
  const bool valid = pairing(kind, E, P1, Q2, r) == pairing(kind, E, P2, Q1, r);
  return {valid, "co-ddh", kind};
}

DdhVerdict solve_ddh(const TorsionContext& ctx, const CurvePoint& P1, const CurvePoint& P2, const CurvePoint& P3,
                     const CurvePoint& P4, const DistortionSpec* hint, PairingKind kind) {
  const Curve& E = ctx.curve();
  const Int& r = ctx.r();
  if (P1.is_identity()) throw ArgumentError("DDH: first component must be nonzero");
  check_point(E, P1, r, "P1");
  check_point(E, P2, r, "P2");
  check_point(E, P3, r, "P3");
  check_point(E, P4, r, "P4");
  for (const CurvePoint* X : {&P2, &P3, &P4}) {
    if (!subgroup_membership(E, P1, *X, r)) throw ArgumentError("DDH tuple is not inside <P1>");
  }
  if (ctx.k() < 2) throw CapabilityError("unsupported: k = 1");
  if (ctx.eigenspace_of(P1) == TorsionContext::Eigenspace::mixed) {
    const CurvePoint T3 = ctx.trace_map(P3);
    const CurvePoint T4 = ctx.trace_map(P4);
    const bool valid = pairing(kind, E, P1, T4, r) == pairing(kind, E, P2, T3, r);
    return {valid, "trace", kind};
  }
  if (!curve_classify(ctx.base(), ctx.order()).supersingular) {
    throw ArgumentError("no distortion map exists: eigenspace of an ordinary curve");
  }
  if (hint == nullptr) throw ArgumentError("distortion map required");
  if (hint->curve != ctx.base()) throw ArgumentError("distortion map belongs to a different curve");
  const FqMap psi = ctx.lift_map(hint->map);
  const bool valid = pairing(kind, E, P2, psi(P3), r) == pairing(kind, E, P1, psi(P4), r);
  return {valid, "distortion", kind};
}

std::string to_string(SubgroupClass c) {
  switch (c) {
    case SubgroupClass::easy_trace: return "easy_trace";
    case SubgroupClass::easy_distortion: return "easy_distortion";
    case SubgroupClass::hard_ordinary_eigenspace: return "hard_ordinary_eigenspace";
    case SubgroupClass::unsupported_k1: return "unsupported: k = 1";
  }
  return "?";
}

SubgroupClass classify_subgroup(const Curve& E, const Int& order, const CurvePoint& P, const Int& r) {
  if (embedding_degree(curve_field(E)->order(), r) == 1) return SubgroupClass::unsupported_k1;
  const TorsionContext ctx(E, order, r);
  const CurvePoint Pk = same_field(P.is_identity() ? ctx.field() : P.x().field(), ctx.field()) ? P : ctx.lift(P);
  if (ctx.eigenspace_of(Pk) == TorsionContext::Eigenspace::mixed) return SubgroupClass::easy_trace;
  return curve_classify(E, order).supersingular ? SubgroupClass::easy_distortion
                                                : SubgroupClass::hard_ordinary_eigenspace;
}

}  // namespace ssddh
