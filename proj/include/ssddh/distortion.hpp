#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ssddh/curve_ff.hpp"
#include "ssddh/pairing.hpp"

namespace ssddh {

struct Certification {
  Int r;
  std::string eigenspace;  // "one" or "q"
};

/// An endomorphism psi of E/F_q, defined over some F_{q^m}, with the data
/// that certifies it as a distortion map.
struct DistortionSpec {
  Curve curve;  // E over F_q
  Int order;    // #E(F_q)
  FqMap map;    // endomorphism of E base-changed to the map's field
  std::optional<Int> d;
  std::vector<Certification> certified_for;
  // Measured lambda with psi^2 = [lambda] on E[r], per certified r.
  std::vector<std::pair<Int, Int>> psi_squared;
  std::string label;
};

// Degree of the map's field over F_q.
unsigned map_extension_degree(const Curve& E, const FqMap& psi);

// Torsion context large enough to evaluate psi on E[r].
TorsionContext context_for(const Curve& E, const Int& order, const Int& r, const FqMap& psi);

struct VerifyReport {
  bool one_eigenspace = false;
  bool q_eigenspace = false;
  bool ok() const { return one_eigenspace && q_eigenspace; }
};

// e_r(P, psi(P)) != 1 for sampled generators P of both eigenspaces.
// Throws ArgumentError when psi is not an endomorphism of E.
VerifyReport verify_distortion_report(const Curve& E, const Int& order, const FqMap& psi, const Int& r,
                                      std::uint64_t seed = 0x5eedULL);
bool verify_distortion(const Curve& E, const Int& order, const FqMap& psi, const Int& r,
                       std::uint64_t seed = 0x5eedULL);

struct ExhaustiveReport {
  Int one_checked = 0;
  Int one_failures = 0;
  Int q_checked = 0;
  Int q_failures = 0;
  bool ok() const { return one_checked > 0 && q_checked > 0 && one_failures == 0 && q_failures == 0; }
};

// e_r(P, psi(P)) != 1 for every nonzero P of both eigenspaces.
ExhaustiveReport verify_distortion_exhaustive(const Curve& E, const Int& order, const FqMap& psi, const Int& r,
                                              std::uint64_t seed = 0x5eedULL);

// lambda in [0, r) with psi(psi(P)) = [lambda] P on all of E[r], if psi^2 acts
// as a scalar there.
std::optional<Int> psi_squared_scalar(const TorsionContext& ctx, const FqMap& lifted_psi, Rng& rng);

// Smallest a in [0, r) with Q = [a] P, by linear scan; nullopt if Q is not in <P>.
std::optional<Int> small_discrete_log(const Curve& E, const CurvePoint& P, const CurvePoint& Q, const Int& r);

// Checks psi against E, certifies it for r and records psi^2.
void certify(DistortionSpec& spec, const Int& r, std::uint64_t seed = 0x5eedULL);

}  // namespace ssddh
