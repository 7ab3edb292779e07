#include "ssddh/catalog.hpp"

#include <algorithm>

#include "ssddh/isogeny.hpp"

namespace ssddh {

namespace {

using R = RationalFunction<FieldElement>;

FieldElement smallest(std::vector<FieldElement> v, const std::string& what) {
  if (v.empty()) throw InternalError("no " + what + " in the constant field");
  return *std::min_element(v.begin(), v.end(), [](const auto& a, const auto& b) { return lex_less(a, b); });
}

// Lex-smallest square root, so both signs give the same constant.
FieldElement canonical_sqrt(const FieldElement& x, const std::string& what) {
  auto y = sqrt(x);
  if (!y) throw InternalError("no " + what + " in the constant field");
  return smallest({*y, -*y}, what);
}

FieldElement primitive_cube_root(const FieldPtr& F) {
  const FieldElement one = FieldElement::one(F);
  return smallest(poly_roots(FqPoly(one, {one, one, one})), "primitive cube root of unity");
}

FqPoly linear(const FieldElement& c1, const FieldElement& c0) { return FqPoly(c1, {c0, c1}); }

FqMap make_map(const Curve& E, FqPoly X, FqPoly Yy, FqPoly Y0, const Int& degree, MapKind kind) {
  FqMap m{E, E, R(std::move(X)), R(std::move(Yy)), R(std::move(Y0)), degree, kind};
  if (!m.lands_on_target()) throw InternalError("catalog map is not an endomorphism");
  return m;
}

Int param(const std::vector<Int>& params, size_t i, long fallback) {
  return i < params.size() ? params[i] : Int(fallback);
}

void expect_params(const std::string& family, const std::vector<Int>& params, size_t max) {
  if (params.size() > max) throw ArgumentError(family + " takes at most " + std::to_string(max) + " parameters");
}

DistortionSpec finish(const Curve& E, FqMap map, std::string label) {
  const Int order = naive_point_count(E);
  return DistortionSpec{E, order, std::move(map), std::nullopt, {}, {}, std::move(label)};
}

void require_prime(const Int& p) {
  if (!is_prime(p)) throw ArgumentError("p must be prime");
}

DistortionSpec row1(const Int& p, const std::vector<Int>& params) {
  expect_params("row1", params, 1);
  if (p == 2 || mod(p, 3) != 2) throw ArgumentError("row1 requires p = 2 mod 3 and p > 2");
  const FieldPtr Fp = FieldDesc::prime(p);
  const Curve E = make_curve(Fp, {0, 0, 0, 0, param(params, 0, 1)});
  const FieldPtr F2 = extension_of(Fp, 2);
  const Curve E2 = base_change(E, Embedding(Fp, F2));
  const FieldElement z = FieldElement::zero(F2);
  const FieldElement one = FieldElement::one(F2);
  const FieldElement zeta = primitive_cube_root(F2);
  return finish(E, make_map(E2, FqPoly(z, {z, zeta}), FqPoly::constant(one), FqPoly(z), 1, MapKind::isomorphism),
                "row1");
}

DistortionSpec row2(const Int& p, const std::vector<Int>& params) {
  expect_params("row2", params, 1);
  if (mod(p, 4) != 3) throw ArgumentError("row2 requires p = 3 mod 4");
  const FieldPtr Fp = FieldDesc::prime(p);
  const Curve E = make_curve(Fp, {0, 0, 0, param(params, 0, 1), 0});
  const FieldPtr F2 = extension_of(Fp, 2);
  const Curve E2 = base_change(E, Embedding(Fp, F2));
  const FieldElement z = FieldElement::zero(F2);
  const FieldElement one = FieldElement::one(F2);
  const FieldElement i = canonical_sqrt(-one, "square root of -1");
  return finish(E, make_map(E2, FqPoly(z, {z, -one}), FqPoly::constant(i), FqPoly(z), 1, MapKind::isomorphism),
                "row2");
}

// Smallest index a in F_{p^2} \ F_p that is a square and not a cube.
FieldElement default_row3_coefficient(const FieldPtr& F) {
  const Int& q = F->order();
  for (Int idx = F->characteristic(); idx < q; ++idx) {
    const FieldElement a = FieldElement::from_index(F, idx);
    if (a.pow((q - 1) / 2).is_one() && !a.pow((q - 1) / 3).is_one()) return a;
  }
  throw InternalError("no admissible coefficient for row3");
}

DistortionSpec row3(const Int& p, const std::vector<Int>& params) {
  expect_params("row3", params, 2);
  if (mod(p, 6) != 5) throw ArgumentError("row3 requires p = 5 mod 6");
  const FieldPtr Fp = FieldDesc::prime(p);
  const FieldPtr F = extension_of(Fp, 2);
  const Int& q = F->order();
  const FieldElement a =
      params.empty() ? default_row3_coefficient(F) : FieldElement::from_coeffs(F, {param(params, 0, 0), param(params, 1, 0)});
  if (a.in_prime_field() || !a.pow((q - 1) / 2).is_one() || a.pow((q - 1) / 3).is_one()) {
    throw ArgumentError("row3 requires a in F_{p^2} \\ F_p a square and not a cube");
  }
  const Curve E(a.zero_like(), a.zero_like(), a.zero_like(), a.zero_like(), a);
  const FieldPtr F6 = extension_of(F, 3);
  const Embedding emb(F, F6);
  const Curve E6 = base_change(E, emb);
  const FieldElement b = emb.lift(canonical_sqrt(a, "square root of a"));
  const FieldElement ratio = b / frobenius(b, p);
  const FieldElement one = ratio.one_like();
  const FieldElement gamma = smallest(poly_roots(FqPoly(one, {-ratio, ratio.zero_like(), ratio.zero_like(), one})), "gamma");
  const auto [A, B] = y_power(E6, p);
  FqPoly X = FqPoly::monomial(gamma * gamma, p.get_ui());
  return finish(E, make_map(E6, std::move(X), A * ratio, B * ratio, p, MapKind::isogeny), "row3");
}

// Constants zeta_3 and s of the characteristic-2 maps, both in F_16.
struct Char2Constants {
  FieldElement zeta;
  FieldElement s;
};

Char2Constants char2_constants(const FieldPtr& F16, bool barreto) {
  const FieldElement one = FieldElement::one(F16);
  const FieldElement zeta = primitive_cube_root(F16);
  // row4: s^2 + zeta s + 1 = 0; Barreto: t^2 + t = zeta.
  const FqPoly f = barreto ? FqPoly(one, {-zeta, one, one}) : FqPoly(one, {one, zeta, one});
  return {zeta, smallest(poly_roots(f), barreto ? "t" : "s")};
}

DistortionSpec row4(const Int& p, const std::vector<Int>& params, bool barreto) {
  const std::string name = barreto ? "row4-barreto" : "row4";
  expect_params(name, params, 1);
  if (p != 2) throw ArgumentError(name + " requires q = 2");
  const Int b = param(params, 0, 0);
  if (b != 0 && b != 1) throw ArgumentError(name + " requires b in {0, 1}");
  const FieldPtr F2 = FieldDesc::prime(2);
  const Curve E = make_curve(F2, {0, 0, 1, 1, b});
  const FieldPtr F16 = extension_of(F2, 4);
  const Curve E16 = base_change(E, Embedding(F2, F16));
  const auto [zeta, s] = char2_constants(F16, barreto);
  const FieldElement one = zeta.one_like();
  const FieldElement z = zeta.zero_like();
  if (barreto) {
    // (x + zeta^2, y + zeta x + t)
    return finish(E, make_map(E16, linear(one, zeta * zeta), FqPoly::constant(one), linear(zeta, s), 1,
                              MapKind::isomorphism),
                  name);
  }
  // (zeta x + s^2, y + zeta s x + s)
  return finish(E, make_map(E16, linear(zeta, s * s), FqPoly::constant(one), linear(zeta * s, s), 1,
                            MapKind::isomorphism),
                name);
}

DistortionSpec row5(const Int& p, const std::vector<Int>& params) {
  expect_params("row5", params, 2);
  if (p != 3) throw ArgumentError("row5 requires q = 3");
  const FieldPtr F3 = FieldDesc::prime(3);
  const Curve E = make_curve(F3, {0, 0, 0, param(params, 0, 2), param(params, 1, 1)});
  const FieldPtr F729 = extension_of(F3, 6);
  const Embedding emb(F3, F729);
  const Curve E6 = base_change(E, emb);
  const FieldElement one = FieldElement::one(F729);
  const FieldElement z = one.zero_like();
  const FieldElement i = canonical_sqrt(-one, "square root of -1");
  // alpha^3 + a alpha - b = 0, alpha in F_27 inside F_729
  const FieldElement alpha = smallest(poly_roots(FqPoly(one, {-E6.a6(), E6.a4(), z, one})), "alpha");
  return finish(E, make_map(E6, linear(-one, alpha), FqPoly::constant(i), FqPoly(z), 1, MapKind::isomorphism),
                "row5");
}

// Constant field F_{p^2} with the lex-smallest square root of D.
FieldElement sqrt_d_mod(long D, const Int& p) {
  const FieldPtr F2 = extension_of(FieldDesc::prime(p), 2);
  return canonical_sqrt(FieldElement::from_int(F2, Int(D)), "square root of D");
}

}  // namespace

const std::vector<CatalogFamily>& catalog_families() {
  static const std::vector<CatalogFamily> families{
      {"row1", "p = 2 mod 3, p > 2", "y^2 = x^3 + a over F_p", "(x, y) -> (zeta3 x, y)", "a (default 1)"},
      {"row2", "p = 3 mod 4", "y^2 = x^3 + a x over F_p", "(x, y) -> (-x, i y)", "a (default 1)"},
      {"row3", "p = 5 mod 6", "y^2 = x^3 + a over F_{p^2}, a a non-cube square outside F_p",
       "(x, y) -> (gamma^2 x^p, b y^p / b^p), a = b^2, gamma^3 = b / b^p",
       "a as two coefficients on the F_{p^2} basis (default: smallest admissible)"},
      {"row4", "q = 2", "y^2 + y = x^3 + x + b over F_2", "(x, y) -> (zeta3 x + s^2, y + zeta3 s x + s), s^2 + zeta3 s + 1 = 0",
       "b (default 0)"},
      {"row4-barreto", "q = 2", "y^2 + y = x^3 + x + b over F_2", "(x, y) -> (x + zeta3^2, y + zeta3 x + t), t^2 + t = zeta3",
       "b (default 0)"},
      {"row5", "q = 3", "y^2 = x^3 + a x + b over F_3", "(x, y) -> (alpha - x, i y), alpha^3 + a alpha - b = 0",
       "a b (default 2 1)"},
      {"D-8", "(-2/p) = -1", "y^2 = x^3 + x^2 - 3x + 1", "2-isogeny with kernel x = 1, then isomorphism back", ""},
      {"D-7", "(-7/p) = -1", "y^2 + xy = x^3 - x^2 - 2x - 1",
       "2-isogeny with kernel x = -(5 + sqrt(-7))/8, then isomorphism back", ""},
  };
  return families;
}

DistortionSpec builtin_distortion(const std::string& family, const Int& p, const std::vector<Int>& params) {
  require_prime(p);
  if (family == "row1") return row1(p, params);
  if (family == "row2") return row2(p, params);
  if (family == "row3") return row3(p, params);
  if (family == "row4") return row4(p, params, false);
  if (family == "row4-barreto") return row4(p, params, true);
  if (family == "row5") return row5(p, params);
  if (family == "D-8" || family == "D-7") {
    expect_params(family, params, 0);
    return cm_reduce(family, p);
  }
  throw ArgumentError("unknown catalog family '" + family + "'");
}

CmExample cm_example(const std::string& id) {
  using QF = Poly<QuadNumber>;
  if (id == "D-8") {
    const long D = -2;
    auto c = [&](long n) { return QuadNumber(D, n); };
    const WeierstrassCurve<QuadNumber> E(c(0), c(1), c(0), c(-3), c(1));
    auto phi = velu_isogeny(E, QF(c(0), {c(-1), c(1)}), VeluModel::short_weierstrass);
    auto iso = find_isomorphism(phi.target, E);
    if (!iso) throw InternalError("D-8: no isomorphism back to E");
    auto psi = compose(*iso, phi);
    return {id, D, std::move(phi), std::move(*iso), std::move(psi)};
  }
  if (id == "D-7") {
    const long D = -7;
    auto c = [&](long n) { return QuadNumber(D, n); };
    const WeierstrassCurve<QuadNumber> E(c(1), c(-1), c(0), c(-2), c(-1));
    const QuadNumber x0(D, Rational(-5, 8), Rational(-1, 8));
    auto phi = velu_isogeny(E, QF(c(0), {-x0, c(1)}));
    auto iso = find_isomorphism(phi.target, E);
    if (!iso) throw InternalError("D-7: no isomorphism back to E");
    auto psi = compose(*iso, phi);
    return {id, D, std::move(phi), std::move(*iso), std::move(psi)};
  }
  throw ArgumentError("unknown CM example '" + id + "'");
}

FieldElement reduce_quadratic(const QuadNumber& z, const FieldElement& sqrt_d) {
  const Int& p = sqrt_d.characteristic();
  auto red = [&](const Rational& q) {
    if (mod(q.get_den(), p) == 0) throw ArgumentError("denominator divisible by " + to_string(p));
    return sqrt_d.constant(mod(q.get_num() * inverse_mod(q.get_den(), p), p));
  };
  return red(z.a()) + red(z.b()) * sqrt_d;
}

DistortionSpec cm_reduce(const std::string& id, const Int& p) {
  require_prime(p);
  const CmExample ex = cm_example(id);
  const Int disc = id == "D-8" ? Int(-8) : Int(-7);
  if (p == 2 || legendre_symbol(disc, p) != -1) throw ArgumentError("reduction not supersingular");
  const FieldElement root = sqrt_d_mod(ex.D, p);
  auto red = [&](const QuadNumber& z) { return reduce_quadratic(z, root); };
  FqMap psi = map_coefficients(ex.composite, root, red);
  const FieldPtr Fp = FieldDesc::prime(p);
  const Curve E = ex.composite.source.map_coefficients([&](const QuadNumber& z) {
    auto r = Embedding(Fp, root.field()).restrict(red(z));
    if (!r) throw InternalError("CM curve coefficient not rational");
    return *r;
  });
  if (!psi.lands_on_target()) throw InternalError("reduced map is not an endomorphism");
  DistortionSpec spec = finish(E, std::move(psi), id);
  // D-7 uses a norm-2 element of trace +-1, so psi^2 != [-2] there.
  if (id == "D-8") spec.d = 2;
  return spec;
}

}  // namespace ssddh
