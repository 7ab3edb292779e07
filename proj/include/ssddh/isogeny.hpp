#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "ssddh/distortion.hpp"
#include "ssddh/isogeny_core.hpp"

namespace ssddh {

// Monic kernel polynomials of all cyclic subgroups of order l of E whose
// kernel polynomial is defined over E's field, sorted by coefficients.
// l = 2 yields the linear factors x - x0 of the 2-torsion abscissae.
std::vector<FqPoly> kernel_polynomials(const Curve& E, unsigned l);

// (x, y) |-> (x^n, y^n) reduced modulo the curve equation: y^n = A(x) y + B(x).
std::pair<FqPoly, FqPoly> y_power(const Curve& E, const Int& n);

// The q-power Frobenius endomorphism of E/F_q as a rational map.
FqMap frobenius_endomorphism(const Curve& E);

/// Classical modular polynomials Phi_l(X, Y) read from "phi_<l>.txt" files
/// ("i j c" per monomial) and verified against the SHA-256 MANIFEST.
class ModularPolyDB {
 public:
  using Monomials = std::vector<std::tuple<unsigned, unsigned, Int>>;

  // Loads and verifies every file listed in dir/MANIFEST.
  explicit ModularPolyDB(const std::string& dir);

  // $SSDDH_MODPOLY_DIR if set, else the data directory of the source tree.
  static const ModularPolyDB& default_db();
  static std::string default_dir();

  bool has(unsigned l) const { return polys_.count(l) != 0; }
  std::vector<unsigned> available() const;
  // Throws CapabilityError for missing l.
  const Monomials& monomials(unsigned l) const;
  const std::string& directory() const { return dir_; }

  Int evaluate(unsigned l, const Int& x, const Int& y) const;
  // Phi_l(x, Y) as a polynomial in Y.
  FqPoly specialize(unsigned l, const FieldElement& x) const;

 private:
  std::string dir_;
  std::map<unsigned, Monomials> polys_;
};

std::string sha256_hex(const std::string& data);

// Distinct roots of Phi_l(j, Y) in the field of j, sorted.
std::vector<FieldElement> modular_roots(unsigned l, const FieldElement& j,
                                        const ModularPolyDB& db = ModularPolyDB::default_db());

struct IsogenyCycle {
  std::vector<unsigned> degrees;       // l_1, ..., l_n
  std::vector<FieldElement> j_path;    // j_0, ..., j_n with j_n = j_0
};

// Cycles through j0 using each prime of the multiset exactly once, in
// deterministic depth-first order (orderings ascending, roots by lex order).
std::vector<IsogenyCycle> isogeny_cycles(const FieldElement& j0, std::vector<unsigned> primes,
                                         const ModularPolyDB& db = ModularPolyDB::default_db(),
                                         size_t limit = 64);

// First cycle for E base-changed to F_{q^2}, or nullopt ("not found").
std::optional<IsogenyCycle> isogeny_cycle_search(const Curve& E, const std::vector<unsigned>& primes,
                                                 const ModularPolyDB& db = ModularPolyDB::default_db());

// Every endomorphism of E2 realizing the cycle: one Velu isogeny per edge
// (all kernels hitting the next j) followed by every isomorphism back to E2.
std::vector<FqMap> realize_cycle(const Curve& E2, const IsogenyCycle& cycle, size_t limit = 256);

// Degree-d distortion map on supersingular E/F_q from an isogeny cycle
// through j(E), certified for r on both eigenspaces. Prefers candidates with
// psi^2 = +-[-d] on E[r].
DistortionSpec construct_distortion(const Curve& E, const Int& order, const Int& d, const Int& r,
                                    const ModularPolyDB& db = ModularPolyDB::default_db());

}  // namespace ssddh
