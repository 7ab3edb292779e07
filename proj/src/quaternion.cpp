#include "ssddh/quaternion.hpp"

#include "ssddh/errors.hpp"

namespace ssddh {

Place Place::parse(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "oo") return infinity();
  const Int p = parse_int(text);
  if (!is_prime(p)) throw ArgumentError("place '" + text + "' is neither a prime nor inf");
  return prime(p);
}

std::string Place::to_string() const { return infinite ? "inf" : ssddh::to_string(p); }

namespace {

int odd_symbol(const Int& m, const Int& n, const Int& p) {
  const unsigned alpha = valuation(m, p);
  const unsigned beta = valuation(n, p);
  const Int u = m / ipow(p, alpha);
  const Int v = n / ipow(p, beta);
  int s = 1;
  if ((alpha * beta) % 2 == 1 && mod(p, Int(4)) == 3) s = -s;
  if (beta % 2 == 1) s *= legendre_symbol(u, p);
  if (alpha % 2 == 1) s *= legendre_symbol(v, p);
  return s;
}

std::set<Int> odd_primes_dividing(const Int& m, const Int& n) {
  std::set<Int> out;
  for (const auto& [p, e] : factor(m)) {
    if (p != 2) out.insert(p);
  }
  for (const auto& [p, e] : factor(n)) {
    if (p != 2) out.insert(p);
  }
  return out;
}

}  // namespace

int hilbert_symbol(const Int& m, const Int& n, const Place& v) {
  if (m == 0 || n == 0) throw ArgumentError("Hilbert symbol needs nonzero m and n");
  if (v.infinite) return (m < 0 && n < 0) ? -1 : 1;
  if (v.p != 2) {
    if (mod(m, v.p) != 0 && mod(n, v.p) != 0) return 1;
    return odd_symbol(m, n, v.p);
  }
  int prod = hilbert_symbol(m, n, Place::infinity());
  for (const Int& p : odd_primes_dividing(m, n)) prod *= odd_symbol(m, n, p);
  return prod;
}

std::set<Place> ramified_set(const Int& m, const Int& n) {
  std::set<Place> out;
  if (hilbert_symbol(m, n, Place::infinity()) == -1) out.insert(Place::infinity());
  if (hilbert_symbol(m, n, Place::prime(2)) == -1) out.insert(Place::prime(2));
  for (const Int& p : odd_primes_dividing(m, n)) {
    if (odd_symbol(m, n, p) == -1) out.insert(Place::prime(p));
  }
  return out;
}

DaggerCertificate check_dagger(const Int& q, const Int& t, const Int& s) {
  auto pa = prime_power(q);
  if (!pa) throw ArgumentError("q must be a prime power");
  if (s <= 0) throw ArgumentError("s must be positive");
  const Int m = t * t - 4 * q;
  if (m == 0) throw ArgumentError("embedding degree 1 case excluded (t^2 = 4q)");
  DaggerCertificate c{q, t, s, false, ramified_set(m, -s)};
  c.holds = c.ramified == std::set<Place>{Place::prime(pa->first), Place::infinity()};
  return c;
}

int choose_s_row(const Int& p, unsigned a, const Int& t) {
  if (!is_prime(p) || a == 0) throw ArgumentError("choose_s needs a prime p and a >= 1");
  const Int at = abs(t);
  const Int p4 = mod(p, Int(4));
  const Int p3 = mod(p, Int(3));
  if (t == 0) {
    if (a % 2 == 1) return p4 == 1 ? 2 : 1;
    if (p == 2 || p4 == 3) return 3;
    throw ArgumentError("t = 0 with a even requires p = 2 or p = 3 mod 4");
  }
  if (a % 2 == 1 && at == ipow(p, (a + 1) / 2)) {
    if (p == 2 || p == 3) return 4;
    throw ArgumentError("t = +-p^((a+1)/2) requires p = 2 or 3");
  }
  if (a % 2 == 0 && at == ipow(p, a / 2)) {
    if (p == 3 || p3 == 2) return 5;
    throw ArgumentError("t = +-p^(a/2) requires p = 3 or p = 2 mod 3");
  }
  if (a % 2 == 0 && at == 2 * ipow(p, a / 2)) {
    throw ArgumentError("t = +-2p^(a/2): embedding degree 1 case excluded");
  }
  throw ArgumentError("(p, a, t) is not a supersingular Waterhouse combination");
}

Int choose_s(const Int& p, unsigned a, const Int& t, const Int& r) {
  const int row = choose_s_row(p, a, t);
  if (!is_prime(r)) throw ArgumentError("r must be prime");
  // The chosen s only certifies a distortion map outside these small-r cases.
  const bool half_power = row == 5;
  if (r == 2) {
    const bool ok = (p != 2 && half_power) || (p == 3 && row == 4);
    if (!ok) throw ArgumentError("r = 2 is outside the range where this s certifies a distortion map");
  } else if (r == 3) {
    if (p == 3 || half_power) throw ArgumentError("r = 3 requires p != 3 and t != +-p^(a/2)");
  }
  switch (row) {
    case 1:
    case 4:
      return 1;
    case 3:
    case 5:
      return p;
    default:
      break;
  }
  // Smallest prime s = 3 mod 4, split in Q(sqrt(-p)), s != r.
  for (Int s = 3;; s += 4) {
    if (s == r || !is_prime(s)) continue;
    if (legendre_symbol(-p, s) == 1) return s;
  }
}

}  // namespace ssddh
