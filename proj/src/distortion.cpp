#include "ssddh/distortion.hpp"

#include <numeric>

namespace ssddh {

unsigned map_extension_degree(const Curve& E, const FqMap& psi) {
  const unsigned base = curve_field(E)->degree();
  const unsigned top = curve_field(psi.source)->degree();
  if (top % base != 0) throw ArgumentError("map field does not contain the curve's field");
  return top / base;
}

TorsionContext context_for(const Curve& E, const Int& order, const Int& r, const FqMap& psi) {
  const unsigned m = map_extension_degree(E, psi);
  const unsigned k = embedding_degree(curve_field(E)->order(), r);
  return TorsionContext(E, order, r, std::lcm(k, m) / k);
}

namespace {

FqMap lifted_endomorphism(const TorsionContext& ctx, const FqMap& psi) {
  if (psi.source != psi.target) throw ArgumentError("distortion map must be an endomorphism");
  return ctx.lift_map(psi);
}

}  // namespace

VerifyReport verify_distortion_report(const Curve& E, const Int& order, const FqMap& psi, const Int& r,
                                      std::uint64_t seed) {
  const TorsionContext ctx = context_for(E, order, r, psi);
  const FqMap lifted = lifted_endomorphism(ctx, psi);
  Rng rng(seed);
  auto good = [&](const CurvePoint& P) {
    const CurvePoint image = lifted(P);
    if (!ctx.curve().contains(image)) throw ArgumentError("map does not send E to E");
    return !weil_pairing(ctx.curve(), P, image, r).is_one();
  };
  VerifyReport rep;
  rep.one_eigenspace = good(ctx.one_eigenspace_generator(rng));
  rep.q_eigenspace = good(ctx.q_eigenspace_generator(rng));
  return rep;
}

bool verify_distortion(const Curve& E, const Int& order, const FqMap& psi, const Int& r, std::uint64_t seed) {
  return verify_distortion_report(E, order, psi, r, seed).ok();
}

ExhaustiveReport verify_distortion_exhaustive(const Curve& E, const Int& order, const FqMap& psi, const Int& r,
                                              std::uint64_t seed) {
  const TorsionContext ctx = context_for(E, order, r, psi);
  const FqMap lifted = lifted_endomorphism(ctx, psi);
  const Curve& Ek = ctx.curve();
  Rng rng(seed);
  auto sweep = [&](const CurvePoint& G, Int& checked, Int& failures) {
    CurvePoint P = G;
    for (Int i = 1; i < r; ++i, P = Ek.add(P, G)) {
      ++checked;
      if (weil_pairing(Ek, P, lifted(P), r).is_one()) ++failures;
    }
  };
  ExhaustiveReport rep;
  sweep(ctx.one_eigenspace_generator(rng), rep.one_checked, rep.one_failures);
  sweep(ctx.q_eigenspace_generator(rng), rep.q_checked, rep.q_failures);
  return rep;
}

std::optional<Int> small_discrete_log(const Curve& E, const CurvePoint& P, const CurvePoint& Q, const Int& r) {
  CurvePoint acc = CurvePoint::identity();
  for (Int a = 0; a < r; ++a) {
    if (acc == Q) return a;
    acc = E.add(acc, P);
  }
  return std::nullopt;
}

std::optional<Int> psi_squared_scalar(const TorsionContext& ctx, const FqMap& lifted_psi, Rng& rng) {
  const Curve& Ek = ctx.curve();
  const CurvePoint P = ctx.one_eigenspace_generator(rng);
  const CurvePoint Q = ctx.q_eigenspace_generator(rng);
  auto lambda = small_discrete_log(Ek, P, lifted_psi(lifted_psi(P)), ctx.r());
  if (!lambda) return std::nullopt;
  for (const CurvePoint& R : {Q, Ek.add(P, Q)}) {
    if (lifted_psi(lifted_psi(R)) != Ek.mul(*lambda, R)) return std::nullopt;
  }
  return lambda;
}

void certify(DistortionSpec& spec, const Int& r, std::uint64_t seed) {
  const TorsionContext ctx = context_for(spec.curve, spec.order, r, spec.map);
  const FqMap lifted = lifted_endomorphism(ctx, spec.map);
  const VerifyReport rep = verify_distortion_report(spec.curve, spec.order, spec.map, r, seed);
  if (rep.one_eigenspace) spec.certified_for.push_back({r, "one"});
  if (rep.q_eigenspace) spec.certified_for.push_back({r, "q"});
  Rng rng(seed);
  if (auto lambda = psi_squared_scalar(ctx, lifted, rng)) spec.psi_squared.emplace_back(r, *lambda);
}

}  // namespace ssddh
