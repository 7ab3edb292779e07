#include "doctest.h"
#include "ssddh/errors.hpp"
#include "ssddh/quaternion.hpp"
#include "support.hpp"

using namespace ssddh;

namespace {

// Strip p^2 factors; the symbol only depends on classes mod squares.
Int reduce_square(Int n, const Int& p) {
  while (n % (p * p) == 0) n /= p * p;
  return n;
}

// (a, b)_p = 1 iff z^2 = a x^2 + b y^2 has a primitive solution in Q_p. For
// odd p and v_p(a), v_p(b) <= 1 a primitive solution mod p^2 decides it.
int hilbert_odd_by_search(Int a, Int b, long p) {
  a = reduce_square(a, p);
  b = reduce_square(b, p);
  const long m = p * p;
  std::vector<bool> square(m, false);
  for (long z = 0; z < m; ++z) square[z * z % m] = true;
  for (long x = 0; x < m; ++x) {
    for (long y = 0; y < m; ++y) {
      if (x % p == 0 && y % p == 0) continue;
      const Int v = mod(a * x * x + b * y * y, Int(m));
      if (square[v.get_si()]) return 1;
    }
  }
  return -1;
}

// Closed form at 2 with a = 2^alpha u, b = 2^beta v.
int hilbert_two_closed_form(Int a, Int b) {
  const unsigned alpha = valuation(a, 2);
  const unsigned beta = valuation(b, 2);
  const Int u = a >> alpha;
  const Int v = b >> beta;
  auto eps = [](const Int& n) { return mod((mod(n, 8) - 1) / 2, Int(2)).get_si(); };
  auto omega = [](const Int& n) {
    const Int r = mod(n, 8);
    return Int((r * r - 1) / 8).get_si() % 2;
  };
  const long e = eps(u) * eps(v) + alpha * omega(v) + beta * omega(u);
  return e % 2 == 0 ? 1 : -1;
}

int product_over_places(const Int& m, const Int& n) {
  int prod = hilbert_symbol(m, n, Place::infinity());
  for (const auto& [p, e] : factor(2 * m * n)) {
    (void)e;
    prod *= hilbert_symbol(m, n, Place::prime(p));
  }
  return prod;
}

Int random_nonzero(Rng& rng, long bound) {
  Int v = 0;
  while (v == 0) v = rng.below(2 * bound + 1) - bound;
  return v;
}

}  // namespace

TEST_SUITE("quaternion") {
  TEST_CASE("symbol values") {
    CHECK(hilbert_symbol(3, 5, Place::prime(7)) == 1);
    CHECK(hilbert_symbol(-11, 11, Place::prime(11)) == 1);
    CHECK(hilbert_symbol(-11, -1, Place::prime(11)) == -1);
    CHECK(hilbert_symbol(-1, -1, Place::infinity()) == -1);
    CHECK(hilbert_symbol(-1, -1, Place::prime(2)) == -1);
    CHECK(hilbert_symbol(-1, 3, Place::infinity()) == 1);
    CHECK_THROWS_AS(hilbert_symbol(0, 3, Place::prime(3)), ArgumentError);
  }

  TEST_CASE("ramified sets") {
    CHECK(ramified_set(-1, -1) == std::set<Place>{Place::prime(2), Place::infinity()});
    CHECK(ramified_set(-11, -1) == std::set<Place>{Place::prime(11), Place::infinity()});
    CHECK(ramified_set(1, 7).empty());
  }

  TEST_CASE("places parse and print") {
    CHECK(Place::parse("inf") == Place::infinity());
    CHECK(Place::parse("13") == Place::prime(13));
    CHECK(Place::infinity().to_string() == "inf");
    CHECK_THROWS_AS(Place::parse("12"), ArgumentError);
  }

  TEST_CASE("odd places agree with a solution search") {
    for (long p : {3, 5, 7, 11}) {
      for (long a = -25; a <= 25; ++a) {
        for (long b = -25; b <= 25; ++b) {
          if (a == 0 || b == 0) continue;
          CHECK_MESSAGE(hilbert_symbol(a, b, Place::prime(p)) == hilbert_odd_by_search(a, b, p),
                        "(", a, ", ", b, ")_", p);
        }
      }
    }
  }

  TEST_CASE("place 2 agrees with the closed form") {
    for (long a = -60; a <= 60; ++a) {
      for (long b = -60; b <= 60; ++b) {
        if (a == 0 || b == 0) continue;
        CHECK(hilbert_symbol(a, b, Place::prime(2)) == hilbert_two_closed_form(a, b));
      }
    }
  }

  TEST_CASE("product formula, symmetry and bilinearity") {
    Rng rng(7);
    for (int i = 0; i < 1000; ++i) {
      const Int m = random_nonzero(rng, 500);
      const Int n = random_nonzero(rng, 500);
      const Int m2 = random_nonzero(rng, 500);
      CHECK(product_over_places(m, n) == 1);
      CHECK(ramified_set(m, n).size() % 2 == 0);
      for (const Place& v : {Place::infinity(), Place::prime(2), Place::prime(3), Place::prime(5)}) {
        CHECK(hilbert_symbol(m, n, v) == hilbert_symbol(n, m, v));
        CHECK(hilbert_symbol(m * m2, n, v) == hilbert_symbol(m, n, v) * hilbert_symbol(m2, n, v));
      }
    }
  }

  TEST_CASE("dagger condition") {
    const auto c = check_dagger(11, 0, 1);
    CHECK(c.holds);
    CHECK(c.ramified == std::set<Place>{Place::prime(11), Place::infinity()});
    CHECK(!check_dagger(13, 0, 1).holds);
    CHECK(check_dagger(9, 3, 3).holds);
  }

  TEST_CASE("choose_s values") {
    CHECK(choose_s(11, 1, 0, 5) == 1);
    CHECK(choose_s(13, 1, 0, 5) == 7);
    CHECK(choose_s(2, 1, -2, 5) == 1);
    CHECK(choose_s_row(13, 1, 0) == 2);
    CHECK(choose_s_row(3, 2, 3) == 5);
    CHECK_THROWS_AS(choose_s(7, 2, 7, 5), ArgumentError);
    CHECK_THROWS_AS(choose_s(5, 1, 1, 7), ArgumentError);
    CHECK_THROWS_AS(choose_s(5, 2, 10, 7), ArgumentError);
    CHECK_THROWS_AS(choose_s(11, 1, 0, 2), ArgumentError);
    CHECK_THROWS_AS(choose_s(3, 1, 0, 3), ArgumentError);
  }

  TEST_CASE("choose_s certifies every admissible small case") {
    int admissible = 0;
    for (long p = 2; p <= 50; ++p) {
      if (!is_prime(p)) continue;
      for (unsigned a = 1; a <= 4; ++a) {
        const Int q = ipow(p, a);
        Int bound = sqrt(4 * q);
        for (Int t = -bound; t <= bound; ++t) {
          int row = 0;
          try {
            row = choose_s_row(p, a, t);
          } catch (const ArgumentError&) {
            continue;
          }
          CHECK(mod(t, p) == 0);
          const Int s = choose_s(p, a, t, 5);
          const auto cert = check_dagger(q, t, s);
          CHECK_MESSAGE(cert.holds, "p=", p, " a=", a, " t=", t, " row=", row);
          ++admissible;
        }
      }
    }
    CHECK(admissible > 30);
  }
}
