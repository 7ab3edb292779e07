#include "ssddh/pairing.hpp"

namespace ssddh {

namespace {

constexpr std::uint64_t kAuxSeed = 0xa0c5eedULL;

void check_torsion(const Curve& E, const CurvePoint& P, const Int& r, const char* name) {
  if (!E.contains(P)) throw ArgumentError(std::string(name) + " is not on the curve");
  if (!E.mul(r, P).is_identity()) throw ArgumentError(std::string(name) + " is not r-torsion");
}

}  // namespace

const char* to_string(PairingKind k) { return k == PairingKind::weil ? "weil" : "tate"; }

PairingKind parse_pairing_kind(const std::string& s) {
  if (s == "weil") return PairingKind::weil;
  if (s == "tate") return PairingKind::tate;
  throw ArgumentError("unknown pairing '" + s + "' (expected weil or tate)");
}

std::optional<FieldElement> miller(const Curve& E, const CurvePoint& P, const CurvePoint& Q, const Int& n) {
  if (Q.is_identity()) throw ArgumentError("miller: evaluation at 0_E");
  const FieldElement& xq = Q.x();
  const FieldElement& yq = Q.y();
  FieldElement f = xq.one_like();
  if (P.is_identity() || n == 0) return f;

  // Multiplies f by l_{T,U}(Q) / v_{T+U}(Q) and returns T + U.
  auto step = [&](const CurvePoint& T, const CurvePoint& U) -> std::optional<CurvePoint> {
    const CurvePoint S = E.add(T, U);
    FieldElement line;
    if (S.is_identity()) {
      line = xq - T.x();
    } else {
      FieldElement lambda;
      if (T == U) {
        lambda = (T.x() * T.x() * xq.constant(3L) + E.a2() * T.x() * xq.constant(2L) + E.a4() - E.a1() * T.y()) /
                 (T.y() * xq.constant(2L) + E.a1() * T.x() + E.a3());
      } else {
        lambda = (U.y() - T.y()) / (U.x() - T.x());
      }
      line = yq - T.y() - lambda * (xq - T.x());
      const FieldElement vert = xq - S.x();
      if (vert.is_zero()) return std::nullopt;
      line /= vert;
    }
    if (line.is_zero()) return std::nullopt;
    f *= line;
    return S;
  };

  CurvePoint T = P;
  const size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (size_t i = bits - 1; i-- > 0;) {
    f *= f;
    auto D = step(T, T);
    if (!D) return std::nullopt;
    T = *D;
    if (mpz_tstbit(n.get_mpz_t(), i)) {
      auto A = step(T, P);
      if (!A) return std::nullopt;
      T = *A;
    }
  }
  return f;
}

FieldElement weil_pairing(const Curve& E, const CurvePoint& P, const CurvePoint& Q, const Int& r) {
  check_torsion(E, P, r, "P");
  check_torsion(E, Q, r, "Q");
  const FieldElement one = E.zero().one_like();
  if (P.is_identity() || Q.is_identity() || P == Q) return one;
  auto fpq = miller(E, P, Q, r);
  auto fqp = miller(E, Q, P, r);
  if (fpq && fqp) {
    FieldElement e = *fpq / *fqp;
    return mpz_odd_p(r.get_mpz_t()) ? -e : e;
  }
  // e(P, Q) = [f_P(Q + S) / f_P(S)] / [f_Q(P - S) / f_Q(-S)]
  Rng rng(kAuxSeed);
  for (int attempt = 0; attempt < kPairingRetries; ++attempt) {
    const CurvePoint S = random_point(E, rng);
    const CurvePoint QS = E.add(Q, S);
    const CurvePoint PS = E.sub(P, S);
    const CurvePoint mS = E.negate(S);
    if (QS.is_identity() || PS.is_identity() || S.is_identity()) continue;
    auto a = miller(E, P, QS, r);
    auto b = miller(E, P, S, r);
    auto c = miller(E, Q, PS, r);
    auto d = miller(E, Q, mS, r);
    if (!a || !b || !c || !d || b->is_zero() || c->is_zero()) continue;
    return (*a / *b) / (*c / *d);
  }
  throw InternalError("Weil pairing: degenerate after " + std::to_string(kPairingRetries) + " attempts");
}

FieldElement tate_pairing(const Curve& E, const CurvePoint& P, const CurvePoint& Q, const Int& r) {
  check_torsion(E, P, r, "P");
  if (!E.contains(Q)) throw ArgumentError("Q is not on the curve");
  const FieldElement one = E.zero().one_like();
  if (P.is_identity() || Q.is_identity()) return one;
  const Int& order = E.zero().field_order();
  if ((order - 1) % r != 0) throw ArgumentError("r does not divide |F| - 1 for the Tate pairing");
  const Int exponent = (order - 1) / r;
  if (auto f = miller(E, P, Q, r)) return f->pow(exponent);
  // f_P(Q + S) / f_P(S), same class after final exponentiation
  Rng rng(kAuxSeed);
  for (int attempt = 0; attempt < kPairingRetries; ++attempt) {
    const CurvePoint S = random_point(E, rng);
    const CurvePoint QS = E.add(Q, S);
    if (QS.is_identity()) continue;
    auto a = miller(E, P, QS, r);
    auto b = miller(E, P, S, r);
    if (!a || !b) continue;
    return (*a / *b).pow(exponent);
  }
  throw InternalError("Tate pairing: degenerate after " + std::to_string(kPairingRetries) + " attempts");
}

FieldElement pairing(PairingKind kind, const Curve& E, const CurvePoint& P, const CurvePoint& Q, const Int& r) {
  return kind == PairingKind::weil ? weil_pairing(E, P, Q, r) : tate_pairing(E, P, Q, r);
}

bool subgroup_membership(const Curve& E, const CurvePoint& P, const CurvePoint& R, const Int& r) {
  if (P.is_identity()) throw ArgumentError("subgroup_membership: P = 0_E");
  return weil_pairing(E, P, R, r).is_one();
}

bool is_primitive_rth_root(const FieldElement& z, const Int& r) { return !z.is_one() && z.pow(r).is_one(); }

}  // namespace ssddh
