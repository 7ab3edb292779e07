#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ssddh {

using Int = mpz_class;

Int parse_int(std::string_view text);
std::string to_string(const Int& n);

// Non-negative residue of a mod m (m > 0).
Int mod(const Int& a, const Int& m);
Int inverse_mod(const Int& a, const Int& m);
Int ipow(const Int& base, unsigned long exponent);

bool is_prime(const Int& n);

// (n / p) for an odd prime p; throws ArgumentError otherwise.
int legendre_symbol(const Int& n, const Int& p);

// Trial-division factorization of |n|, n != 0. Desk-scale only.
std::vector<std::pair<Int, unsigned>> factor(const Int& n);

// Returns (p, a) when q = p^a with p prime and a >= 1.
std::optional<std::pair<Int, unsigned>> prime_power(const Int& q);

// Exponent of the prime r in n (n != 0).
unsigned valuation(const Int& n, const Int& r);

// Seedable PRNG; the only stateful object in the library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0x5eedULL) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, bound), bound > 0.
  Int below(const Int& bound);

 private:
  std::mt19937_64 engine_;
};

}  // namespace ssddh
