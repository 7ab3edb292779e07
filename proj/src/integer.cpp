#include "ssddh/integer.hpp"

#include "ssddh/errors.hpp"

namespace ssddh {

Int parse_int(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  Int n;
  if (s.empty() || n.set_str(s, 10) != 0) {
    throw ArgumentError("not a decimal integer: '" + std::string(text) + "'");
  }
  return n;
}

std::string to_string(const Int& n) { return n.get_str(10); }

Int mod(const Int& a, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Int inverse_mod(const Int& a, const Int& m) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw ArgumentError(to_string(a) + " is not invertible modulo " + to_string(m));
  }
  return r;
}

Int ipow(const Int& base, unsigned long exponent) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  // GMP runs BPSW first, which has no known counterexample and is proven
  // correct below 2^64.
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

int legendre_symbol(const Int& n, const Int& p) {
  if (p == 2 || !is_prime(p)) {
    throw ArgumentError("legendre_symbol: " + to_string(p) + " is not an odd prime");
  }
  Int r = mod(n, p);
  return mpz_legendre(r.get_mpz_t(), p.get_mpz_t());
}

std::vector<std::pair<Int, unsigned>> factor(const Int& n) {
  if (n == 0) throw ArgumentError("factor: zero has no factorization");
  Int m = abs(n);
  std::vector<std::pair<Int, unsigned>> out;
  auto strip = [&](const Int& d) {
    unsigned e = 0;
    while (mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t())) {
      m /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  };
  strip(2);
  for (Int d = 3; d * d <= m; d += 2) {
    if (is_prime(m)) break;
    strip(d);
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

std::optional<std::pair<Int, unsigned>> prime_power(const Int& q) {
  if (q < 2) return std::nullopt;
  auto f = factor(q);
  if (f.size() != 1) return std::nullopt;
  return f.front();
}

unsigned valuation(const Int& n, const Int& r) {
  if (n == 0) throw ArgumentError("valuation of zero");
  Int m = n;
  unsigned e = 0;
  while (mpz_divisible_p(m.get_mpz_t(), r.get_mpz_t())) {
    m /= r;
    ++e;
  }
  return e;
}

Int Rng::below(const Int& bound) {
  if (bound <= 0) throw ArgumentError("Rng::below: bound must be positive");
  const size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2) + 64;
  Int acc = 0;
  for (size_t got = 0; got < bits; got += 64) {
    acc <<= 64;
    acc += static_cast<unsigned long>(engine_());
  }
  return mod(acc, bound);
}

}  // namespace ssddh
