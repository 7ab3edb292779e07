#pragma once

#include <set>
#include <string>

#include "ssddh/integer.hpp"

namespace ssddh {

/// A place of Q: a prime p or the infinite place.
struct Place {
  bool infinite = false;
  Int p;

  static Place infinity() { return {true, Int(0)}; }
  static Place prime(const Int& p) { return {false, p}; }
  static Place parse(const std::string& text);  // "inf" or a prime

  bool operator<(const Place& o) const {
    if (infinite != o.infinite) return !infinite;  // finite places first
    return p < o.p;
  }
  bool operator==(const Place& o) const { return infinite == o.infinite && (infinite || p == o.p); }
  std::string to_string() const;
};

// (m, n)_v in {-1, +1}. The symbol at 2 comes from the product formula.
int hilbert_symbol(const Int& m, const Int& n, const Place& v);

// Places where (m, n / Q) ramifies, among infinity and the primes dividing 2mn.
std::set<Place> ramified_set(const Int& m, const Int& n);

struct DaggerCertificate {
  Int q;
  Int t;
  Int s;
  bool holds = false;
  std::set<Place> ramified;
};

// B_p = ((t^2 - 4q, -s) / Q), i.e. the ramified set is {p, inf}.
DaggerCertificate check_dagger(const Int& q, const Int& t, const Int& s);

// s from the table for the supersingular trace t of a curve over F_{p^a}.
// Throws ArgumentError for inadmissible (p, a, t) and for r outside the
// range where the construction applies (r = 2, 3 edge cases).
Int choose_s(const Int& p, unsigned a, const Int& t, const Int& r);

// Table row (1-5) that choose_s uses for (p, a, t).
int choose_s_row(const Int& p, unsigned a, const Int& t);

}  // namespace ssddh
