#include <set>

#include "doctest.h"
#include "ssddh/ffpoly.hpp"
#include "support.hpp"

using namespace ssddh;
using ssddh::testing::all_elements;
using ssddh::testing::random_element;

TEST_SUITE("field") {
  TEST_CASE("legendre symbol") {
    CHECK(legendre_symbol(2, 7) == 1);
    CHECK(legendre_symbol(-1, 11) == -1);
    CHECK(legendre_symbol(-13, 7) == 1);
    CHECK(legendre_symbol(14, 7) == 0);
    CHECK_THROWS_AS(legendre_symbol(3, 2), ArgumentError);
    CHECK_THROWS_AS(legendre_symbol(3, 9), ArgumentError);
  }

  TEST_CASE("legendre agrees with Euler's criterion") {
    for (long p : {3, 5, 7, 11, 13, 101}) {
      for (long n = -20; n < 40; ++n) {
        Int e;
        mpz_powm_ui(e.get_mpz_t(), mod(n, p).get_mpz_t(), (p - 1) / 2, Int(p).get_mpz_t());
        const int euler = e == 0 ? 0 : e == 1 ? 1 : -1;
        CHECK(legendre_symbol(n, p) == euler);
      }
    }
  }

  TEST_CASE("canonical modulus is the smallest monic irreducible") {
    const auto F = FieldDesc::extension(5, 2);
    const std::vector<Int> m = F->modulus();
    REQUIRE(m.size() == 3);
    // Oracle: scan monic quadratics x^2 + b x + c in base-5 order of (c, b)
    // and take the first without a root in F_5.
    std::vector<Int> expect;
    for (long idx = 0; idx < 25 && expect.empty(); ++idx) {
      const long c = idx % 5;
      const long b = idx / 5;
      bool root = false;
      for (long x = 0; x < 5; ++x) root |= (x * x + b * x + c) % 5 == 0;
      if (!root) expect = {c, b, 1};
    }
    CHECK(m == expect);
    CHECK_THROWS_AS(FieldDesc::with_modulus(5, {1, 0, 1}), ArgumentError);  // x^2 + 1 = (x - 2)(x + 2)
    CHECK_THROWS_AS(FieldDesc::prime(15), ArgumentError);
  }

  TEST_CASE("field axioms on random triples") {
    Rng rng(11);
    for (const auto& F : {FieldDesc::prime(59), FieldDesc::extension(59, 2), FieldDesc::extension(2, 4),
                          FieldDesc::extension(3, 6), FieldDesc::extension(5, 3)}) {
      for (int i = 0; i < 1000; ++i) {
        const auto a = random_element(F, rng);
        const auto b = random_element(F, rng);
        const auto c = random_element(F, rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
      }
    }
  }

  TEST_CASE("inverse of zero and mixing fields are rejected") {
    const auto F = FieldDesc::prime(7);
    CHECK_THROWS_AS(FieldElement::zero(F).inverse(), ArgumentError);
    const auto G = FieldDesc::prime(11);
    CHECK_THROWS_AS(FieldElement::one(F) + FieldElement::one(G), ArgumentError);
  }

  TEST_CASE("sqrt") {
    const auto F7 = FieldDesc::prime(7);
    const auto r = sqrt(FieldElement::from_int(F7, 2));
    REQUIRE(r);
    CHECK((r->coeffs()[0] == 3 || r->coeffs()[0] == 4));
    CHECK(sqrt(FieldElement::zero(F7))->is_zero());

    // Oracle: exhaustive square tables of F_5 and F_25.
    for (unsigned m : {1u, 2u}) {
      const auto F = FieldDesc::extension(5, m);
      const auto target = FieldElement::from_int(F, -7);
      bool is_square = false;
      for (const auto& y : all_elements(F)) is_square |= y * y == target;
      CHECK(sqrt(target).has_value() == is_square);
      CHECK(is_square == (m == 2));
    }
  }

  TEST_CASE("sqrt of squares returns a root up to sign") {
    Rng rng(3);
    for (const auto& F : {FieldDesc::prime(101), FieldDesc::extension(7, 3), FieldDesc::extension(2, 5),
                          FieldDesc::extension(13, 2)}) {
      for (int i = 0; i < 500; ++i) {
        const auto y = random_element(F, rng);
        const auto s = sqrt(y * y);
        REQUIRE(s);
        CHECK((*s == y || *s == -y));
      }
    }
  }

  TEST_CASE("frobenius") {
    const auto F = FieldDesc::extension(59, 2);
    const auto x = FieldElement::from_int(F, 17);
    CHECK(frobenius(x, 59, 3) == x);

    const auto zeta = [&] {
      const auto one = FieldElement::one(F);
      for (const auto& r : poly_roots(FqPoly(one, {one, one, one}))) return r;
      return one;
    }();
    CHECK(frobenius(zeta, 59) == zeta * zeta);

    // p = 5 is inert in Q(sqrt(-2)): Frobenius conjugates the root.
    const auto F25 = FieldDesc::extension(5, 2);
    const auto s = *sqrt(FieldElement::from_int(F25, -2));
    CHECK(frobenius(s, 5) == -s);

    Rng rng(5);
    for (const auto& [p, m, a] : std::vector<std::tuple<long, unsigned, unsigned>>{{3, 6, 1}, {3, 6, 2}, {2, 4, 1}, {5, 6, 3}}) {
      const auto G = FieldDesc::extension(p, m);
      for (int i = 0; i < 50; ++i) {
        const auto y = random_element(G, rng);
        CHECK(frobenius(y, ipow(p, a), m / a) == y);
      }
    }
  }

  TEST_CASE("poly_roots") {
    const auto F4 = FieldDesc::extension(2, 2);
    const auto one = FieldElement::one(F4);
    const auto roots = poly_roots(FqPoly(one, {one, one, one}));
    REQUIRE(roots.size() == 2);
    for (const auto& r : roots) CHECK(!r.in_prime_field());

    // Oracle: evaluate at every element of F_5.
    const auto F5 = FieldDesc::prime(5);
    const FqPoly f(FieldElement::one(F5), {FieldElement::from_int(F5, 3), FieldElement::one(F5),
                                           FieldElement::zero(F5), FieldElement::one(F5)});
    std::vector<FieldElement> scan;
    for (const auto& x : all_elements(F5)) {
      if (f(x).is_zero()) scan.push_back(x);
    }
    CHECK(poly_roots(f) == scan);

    CHECK_THROWS_AS(poly_roots(FqPoly(FieldElement::zero(F5))), ArgumentError);
  }

  TEST_CASE("roots are sorted, distinct and at most deg f") {
    Rng rng(17);
    for (const auto& F : {FieldDesc::prime(101), FieldDesc::extension(3, 4), FieldDesc::extension(2, 6),
                          FieldDesc::extension(1009, 2)}) {
      for (int i = 0; i < 40; ++i) {
        std::vector<FieldElement> c;
        const int deg = 1 + static_cast<int>(rng.below(7).get_ui());
        for (int j = 0; j < deg; ++j) c.push_back(random_element(F, rng));
        c.push_back(FieldElement::one(F));
        const FqPoly f(FieldElement::one(F), c);
        const auto roots = poly_roots(f);
        CHECK(roots.size() <= static_cast<size_t>(f.degree()));
        for (size_t j = 0; j < roots.size(); ++j) {
          CHECK(f(roots[j]).is_zero());
          if (j > 0) CHECK(lex_less(roots[j - 1], roots[j]));
        }
      }
    }
  }

  TEST_CASE("large-field roots agree with exhaustive scan on a small field") {
    // Splitting path (F_{2^17}) against the scan path, on a product of known linears.
    const auto F = FieldDesc::extension(2, 17);
    Rng rng(23);
    std::vector<FieldElement> want;
    for (int i = 0; i < 5; ++i) want.push_back(random_element(F, rng));
    std::sort(want.begin(), want.end(), [](const auto& a, const auto& b) { return lex_less(a, b); });
    want.erase(std::unique(want.begin(), want.end()), want.end());
    CHECK(poly_roots(FqPoly::from_roots(FieldElement::one(F), want)) == want);
  }

  TEST_CASE("embedding and restriction") {
    const auto F2 = FieldDesc::extension(7, 2);
    const auto F6 = FieldDesc::extension(7, 6);
    const Embedding emb(F2, F6);
    Rng rng(9);
    for (int i = 0; i < 100; ++i) {
      const auto a = random_element(F2, rng);
      const auto b = random_element(F2, rng);
      CHECK(emb.lift(a * b) == emb.lift(a) * emb.lift(b));
      CHECK(emb.lift(a + b) == emb.lift(a) + emb.lift(b));
      CHECK(emb.restrict(emb.lift(a)) == a);
    }
    // An element generating F_{7^6} is not in the image.
    CHECK(!emb.restrict(FieldElement::generator(F6)).has_value());
  }

  TEST_CASE("compatible embedding commutes with the base embedding") {
    const auto F4 = FieldDesc::extension(2, 2);
    const auto top = FieldDesc::extension(2, 12);
    const Embedding base_top(F4, top);
    for (unsigned k : {2u, 3u}) {
      const Embedding base_mid(F4, extension_of(F4, k));
      const Embedding mid_top = compatible_embedding(base_mid, base_top);
      const auto g = FieldElement::generator(F4);
      CHECK(mid_top.lift(base_mid.lift(g)) == base_top.lift(g));
    }
  }
}
