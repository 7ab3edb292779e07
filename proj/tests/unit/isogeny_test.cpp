#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "ssddh/catalog.hpp"
#include "ssddh/isogeny.hpp"
#include "support.hpp"

using namespace ssddh;

namespace {

using QF = Poly<QuadNumber>;
using QR = RationalFunction<QuadNumber>;

QuadNumber qn(long D, Rational a, Rational b = 0) { return QuadNumber(D, std::move(a), std::move(b)); }

template <class F>
bool same_function(const RationalFunction<F>& a, const RationalFunction<F>& b) {
  return (a - b).is_zero();
}

// Phi_l(x, y) from the raw monomial list.
FieldElement evaluate_by_monomials(const ModularPolyDB& db, unsigned l, const FieldElement& x, const FieldElement& y) {
  FieldElement acc = x.zero_like();
  for (const auto& [i, j, c] : db.monomials(l)) acc += x.constant(c) * x.pow(i) * y.pow(j);
  return acc;
}

// The D-8 curve y^2 = x^3 + x^2 - 3x + 1 over F_p.
Curve d8_curve(long p) { return make_curve(FieldDesc::prime(p), {0, 1, 0, -3, 1}); }

// Every point of E[r] for an r-torsion context with basis P, Q.
std::vector<CurvePoint> full_torsion(const TorsionContext& ctx, Rng& rng) {
  const Curve& E = ctx.curve();
  const auto P = ctx.one_eigenspace_generator(rng);
  const auto Q = ctx.q_eigenspace_generator(rng);
  std::vector<CurvePoint> out;
  for (const auto& A : testing::multiples(E, P, ctx.r()))
    for (const auto& B : testing::multiples(E, Q, ctx.r())) out.push_back(E.add(A, B));
  return out;
}

}  // namespace

TEST_SUITE("isogeny") {
  TEST_CASE("modular polynomial database") {
    const auto& db = ModularPolyDB::default_db();
    CHECK(db.available() == std::vector<unsigned>{2, 3, 5, 7, 11, 13});
    CHECK(db.monomials(2).size() == 11);
    CHECK(db.monomials(13).size() == 195);
    CHECK(db.evaluate(2, 8000, 8000) == 0);
    CHECK(db.evaluate(2, 1728, 1728) == 0);
    CHECK(db.evaluate(2, 0, 54000) == 0);
    CHECK(db.evaluate(3, 0, -12288000) == 0);
    CHECK(db.evaluate(3, 0, 0) == 0);
    for (unsigned l : db.available()) CHECK(db.evaluate(l, 17, -5) == db.evaluate(l, -5, 17));
    CHECK_THROWS_AS(db.monomials(17), CapabilityError);
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  }

  TEST_CASE("database rejects a tampered file") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "ssddh_modpoly_tamper";
    fs::create_directories(dir);
    const fs::path src = ModularPolyDB::default_dir();
    fs::copy_file(src / "MANIFEST", dir / "MANIFEST", fs::copy_options::overwrite_existing);
    for (unsigned l : {2, 3, 5, 7, 11, 13}) {
      const std::string name = "phi_" + std::to_string(l) + ".txt";
      fs::copy_file(src / name, dir / name, fs::copy_options::overwrite_existing);
    }
    CHECK_NOTHROW(ModularPolyDB(dir.string()));
    {
      std::ofstream out(dir / "phi_2.txt", std::ios::app);
      out << "0 0 1\n";
    }
    CHECK_THROWS(ModularPolyDB(dir.string()));
    fs::remove_all(dir);
  }

  TEST_CASE("modular roots agree with exhaustive evaluation") {
    const auto& db = ModularPolyDB::default_db();
    const auto F = FieldDesc::extension(11, 2);
    const auto zero = FieldElement::zero(F);
    std::vector<FieldElement> expected;
    for (const auto& y : testing::all_elements(F))
      if (evaluate_by_monomials(db, 2, zero, y).is_zero()) expected.push_back(y);
    std::sort(expected.begin(), expected.end(),
              [](const FieldElement& a, const FieldElement& b) { return lex_less(a, b); });
    const auto roots = modular_roots(2, zero, db);
    CHECK(roots == expected);
    // Supersingular j-invariants mod 11 are 0 and 1728 = 1.
    for (const auto& j : roots) CHECK((j.is_zero() || j.is_one()));
  }

  TEST_CASE("3-kernels on y^2 = x^3 + 1 over F_59^2") {
    const Curve E = make_curve(FieldDesc::extension(59, 2), {0, 0, 0, 0, 1});
    const auto kernels = kernel_polynomials(E, 3);
    REQUIRE(kernels.size() == 4);
    for (const auto& K : kernels) {
      REQUIRE(K.degree() == 1);
      const auto ys = lift_x(E, -K.coeff(0));
      REQUIRE(!ys.empty());
      const CurvePoint P(-K.coeff(0), ys.front());
      CHECK(!P.is_identity());
      CHECK(E.mul(3, P).is_identity());
    }
    CHECK(kernel_polynomials(E, 2).size() == 3);
    CHECK_THROWS_AS(kernel_polynomials(E, 59), ArgumentError);
  }

  TEST_CASE("Velu isogenies are homomorphisms onto an l-isogenous curve") {
    const auto& db = ModularPolyDB::default_db();
    const Curve E = make_curve(FieldDesc::extension(59, 2), {0, 0, 0, 0, 1});
    Rng rng(9);
    for (unsigned l : {2u, 3u, 5u}) {
      for (const auto& K : kernel_polynomials(E, l)) {
        for (auto model : {VeluModel::normalized, VeluModel::short_weierstrass}) {
          const auto phi = velu_isogeny(E, K, model);
          CHECK(phi.degree == l);
          CHECK(phi.lands_on_target());
          const auto j = E.j_invariant();
          CHECK(db.specialize(l, j)(phi.target.j_invariant()).is_zero());
          for (int i = 0; i < 50; ++i) {
            const auto P = random_point(E, rng);
            const auto Q = random_point(E, rng);
            CHECK(phi(E.add(P, Q)) == phi.target.add(phi(P), phi(Q)));
          }
          for (const auto& x0 : poly_roots(K)) {
            const auto ys = lift_x(E, x0);
            if (!ys.empty()) CHECK(phi(CurvePoint(x0, ys.front())).is_identity());
          }
        }
      }
    }
    const Curve E2 = make_curve(FieldDesc::extension(2, 4), {1, 1, 0, 0, 1});
    CHECK_THROWS_AS(velu_isogeny(E2, Poly<FieldElement>::x(E2.zero())), CapabilityError);
  }

  TEST_CASE("isomorphisms and composition") {
    const Curve E = make_curve(FieldDesc::extension(59, 2), {0, 0, 0, 0, 1});
    const auto autos = isomorphism_parameters(E, E);
    CHECK(autos.size() == 6);  // j = 0, p = 2 mod 3
    const auto id = find_isomorphism(E, E);
    REQUIRE(id);
    Rng rng(3);
    const auto P = random_point(E, rng);
    const auto [u, r, s, t] = autos.front();
    const auto aut = weierstrass_isomorphism(E, u, r, s, t);
    CHECK(aut.lands_on_target());
    CHECK(E.contains(aut(P)));

    const auto k2 = kernel_polynomials(E, 2).front();
    const auto k3 = kernel_polynomials(E, 3).front();
    const auto phi2 = velu_isogeny(E, k2);
    const auto phi3 = velu_isogeny(phi2.target, kernel_polynomials(phi2.target, 3).front());
    CHECK(compose(phi3, phi2).degree == 6);
    CHECK(compose(phi3, phi2).lands_on_target());
    CHECK_THROWS_AS(compose(phi2, velu_isogeny(E, k3)), ArgumentError);
  }

  TEST_CASE("D-8 example in characteristic zero") {
    const auto ex = cm_example("D-8");
    const long D = -2;
    auto c = [&](long a, long b = 1) { return qn(D, Rational(a, b)); };
    // (3x^2 - 2x + 5) / (3(x - 1)) and y (x^2 - 2x - 1) / (x - 1)^2
    CHECK(same_function(ex.isogeny.x_map, QR(QF(c(0), {c(5), c(-2), c(3)}), QF(c(0), {c(-3), c(3)}))));
    CHECK(same_function(ex.isogeny.y_coeff, QR(QF(c(0), {c(-1), c(-2), c(1)}), QF(c(0), {c(1), c(-2), c(1)}))));
    CHECK(ex.isogeny.y_const.is_zero());
    const auto& T = ex.isogeny.target;
    CHECK(T.a4() == c(-40, 3));
    CHECK(T.a6() == c(-448, 27));
    CHECK(T.j_invariant() == c(8000));
    // (x, y) -> (-x/2 - 1/3, sqrt(-2) y / 4) is one of the isomorphisms back.
    const auto params = isomorphism_parameters(T, ex.isogeny.source);
    const QuadNumber u = qn(D, 0, Rational(-1, 2));
    bool found = false;
    for (const auto& [pu, pr, ps, pt] : params) found |= pu == u && pr == c(-1, 3) && ps.is_zero() && pt.is_zero();
    CHECK(found);
    CHECK(ex.composite.degree == 2);
    CHECK(ex.composite.source == ex.composite.target);
  }

  TEST_CASE("D-7 example in characteristic zero") {
    const auto ex = cm_example("D-7");
    const long D = -7;
    auto c = [&](long a, long b = 1) { return qn(D, Rational(a, b)); };
    auto w = [&](long a, long b, long den) { return qn(D, Rational(a, den), Rational(b, den)); };
    const auto& T = ex.isogeny.target;
    CHECK(T.a1() == c(1));
    CHECK(T.a2() == c(-1));
    CHECK(T.a4() == w(-29, -105, 32));
    CHECK(T.a6() == w(-849, 595, 128));
    CHECK(T.j_invariant() == c(-3375));
    // X = x + (-7 + 21 sqrt(-7)) / (32x + 20 + 4 sqrt(-7))
    CHECK(same_function(ex.isogeny.x_map, QR(QF::x(c(0))) + QR(QF(c(0), {w(-7, 21, 1)}), QF(c(0), {w(20, 4, 1), c(32)}))));
    const auto params = isomorphism_parameters(T, ex.isogeny.source);
    bool found = false;
    for (const auto& [u, r, s, t] : params)
      found |= u == w(-1, -1, 4) && r == w(11, -1, 32) && s == w(-5, -1, 8) && t == w(-11, 1, 64);
    CHECK(found);
    // x-coordinate of the composite.
    const QR closed = QR(QF(c(0), {c(0), w(-3, 1, 8)})) +
                      QR(QF(c(0), {w(-63, -35, 16)}), QF(c(0), {w(5, 1, 1), c(8)})) + QR(QF(c(0), {w(11, -1, 32)}));
    CHECK(same_function(ex.composite.x_map, closed));
  }

  TEST_CASE("cycle construction on the D-8 curve") {
    for (long p : {5L, 13L}) {
      const Curve E = d8_curve(p);
      const Int n = naive_point_count(E);
      const Int r = p == 5 ? 3 : 7;
      const auto spec = construct_distortion(E, n, 2, r);
      CHECK(spec.map.degree == 2);
      CHECK(spec.d == Int(2));
      CHECK(spec.certified_for.size() == 2);
      REQUIRE(spec.psi_squared.size() == 1);
      CHECK(spec.psi_squared.front().second == mod(Int(-2), r));
      CHECK(verify_distortion(E, n, spec.map, r));
      CHECK(spec.label == "isogeny-cycle");
    }
  }

  TEST_CASE("cycle construction error paths") {
    const Curve ordinary = make_curve(FieldDesc::prime(13), {0, 0, 0, 1, 1});
    CHECK_THROWS_AS(construct_distortion(ordinary, naive_point_count(ordinary), 2, 7), ArgumentError);
    const Curve E = d8_curve(13);
    const Int n = naive_point_count(E);
    CHECK_THROWS_AS(construct_distortion(E, n, 17, 7), CapabilityError);
    CHECK_THROWS_AS(construct_distortion(E, n, 2, 2), ArgumentError);
    CHECK_THROWS_AS(construct_distortion(E, n, 7, 7), ArgumentError);
    CHECK(!isogeny_cycle_search(E, {}).has_value());
    CHECK(isogeny_cycle_search(E, {2}).has_value());
  }

  TEST_CASE("cycles close up") {
    const Curve E = d8_curve(13);
    const auto cyc = isogeny_cycle_search(E, {2, 3});
    if (cyc) {
      CHECK(cyc->j_path.front() == cyc->j_path.back());
      CHECK(cyc->j_path.size() == cyc->degrees.size() + 1);
    }
    const auto cycles = isogeny_cycles(E.j_invariant(), {2});
    for (const auto& c : cycles) CHECK(c.degrees == std::vector<unsigned>{2});
  }

  TEST_CASE("non-distortion maps are rejected") {
    const Curve E = d8_curve(13);
    const Int n = naive_point_count(E);
    CHECK(!verify_distortion(E, n, identity_map(E), 7));
    CHECK(!verify_distortion(E, n, frobenius_endomorphism(E), 7));
    const auto frob = frobenius_endomorphism(E);
    CHECK(frob.degree == 13);
    CHECK(frob.lands_on_target());
  }

  TEST_CASE("D-8 map: psi^2 = [-2] on all of E[5] at p = 29") {
    const auto spec = cm_reduce("D-8", 29);
    REQUIRE(spec.order == 30);
    const TorsionContext ctx = context_for(spec.curve, spec.order, 5, spec.map);
    const auto psi = ctx.lift_map(spec.map);
    const Curve& E = ctx.curve();
    Rng rng(11);
    for (const auto& P : full_torsion(ctx, rng)) CHECK(psi(psi(P)) == E.mul(-2, P));
  }

  TEST_CASE("D-8 map anticommutes with Frobenius") {
    for (long p : {5L, 13L}) {
      const auto spec = cm_reduce("D-8", p);
      const Curve& E = spec.map.source;
      for (const auto& Q : enumerate_points(E)) {
        CHECK(frobenius_point(spec.map(Q), p) == E.negate(spec.map(frobenius_point(Q, p))));
      }
    }
  }

  TEST_CASE("D-7 map: pi psi + psi pi = +-pi") {
    for (long p : {5L, 13L, 17L}) {
      const auto spec = cm_reduce("D-7", p);
      const Curve& E = spec.map.source;
      std::optional<int> sign;
      for (const auto& Q : enumerate_points(E)) {
        const auto fQ = frobenius_point(Q, p);
        const auto s = E.add(frobenius_point(spec.map(Q), p), spec.map(fQ));
        if (fQ == E.negate(fQ)) {
          CHECK((s == fQ));
          continue;
        }
        const int here = s == fQ ? 1 : (s == E.negate(fQ) ? -1 : 0);
        CHECK(here != 0);
        if (!sign) sign = here;
        CHECK(here == *sign);
      }
    }
  }

  TEST_CASE("pi psi - psi pi has trivial kernel on E[r]") {
    const auto spec = cm_reduce("D-8", 13);
    const TorsionContext ctx = context_for(spec.curve, spec.order, 7, spec.map);
    const auto psi = ctx.lift_map(spec.map);
    Rng rng(12);
    int kernel = 0;
    for (const auto& T : full_torsion(ctx, rng)) kernel += ctx.frobenius(psi(T)) == psi(ctx.frobenius(T));
    CHECK(kernel == 1);
  }
}
