#include "ssddh/isogeny.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#ifndef SSDDH_DEFAULT_MODPOLY_DIR
#define SSDDH_DEFAULT_MODPOLY_DIR "data/modpoly"
#endif

namespace ssddh {

namespace {

bool poly_less(const FqPoly& a, const FqPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = 0; i <= a.degree(); ++i) {
    if (lex_less(a.coeff(i), b.coeff(i))) return true;
    if (lex_less(b.coeff(i), a.coeff(i))) return false;
  }
  return false;
}

bool contains(const std::vector<FieldElement>& v, const FieldElement& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

}  // namespace

std::vector<FqPoly> kernel_polynomials(const Curve& E, unsigned l) {
  const FieldPtr& F = curve_field(E);
  if (!is_prime(Int(l))) throw ArgumentError("kernel_polynomials: l must be prime");
  if (F->characteristic() == l) throw ArgumentError("l = p: inseparable");
  const FieldElement zero = E.zero();
  DivisionPolynomials<FieldElement> div(E);
  std::vector<FqPoly> out;
  if (l == 2) {
    for (const auto& x0 : poly_roots(div.two_torsion())) out.emplace_back(zero, std::vector{-x0, zero.one_like()});
    return out;
  }
  const unsigned n = (l - 1) / 2;
  for (const auto& [d, g] : distinct_degree_factorization(div.f(l))) {
    if (n % d != 0) continue;
    const Embedding emb(F, extension_of(F, d));
    const Curve Ed = base_change(E, emb);
    DivisionPolynomials<FieldElement> divd(Ed);
    std::vector<FieldElement> covered;
    for (const auto& X : poly_roots(emb.lift(g))) {
      if (contains(covered, X)) continue;
      FqPoly K = FqPoly::constant(X.one_like());
      for (unsigned i = 1; i <= n; ++i) {
        auto xi = divd.multiple_x(i, X);
        if (!xi) throw InternalError("kernel_polynomials: torsion point of unexpected order");
        covered.push_back(*xi);
        K *= FqPoly(X.zero_like(), {-*xi, X.one_like()});
      }
      std::vector<FieldElement> coeffs;
      bool rational = true;
      for (const auto& c : K.coeffs()) {
        auto r = emb.restrict(c);
        if (!r) {
          rational = false;
          break;
        }
        coeffs.push_back(*r);
      }
      if (rational) out.emplace_back(zero, std::move(coeffs));
    }
  }
  std::sort(out.begin(), out.end(), poly_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::pair<FqPoly, FqPoly> y_power(const Curve& E, const Int& n) {
  const FieldElement z = E.zero();
  // y^2 = -h(x) y + f(x)
  const FqPoly h(z, {E.a3(), E.a1()});
  const FqPoly f(z, {E.a6(), E.a4(), E.a2(), z.one_like()});
  using Pair = std::pair<FqPoly, FqPoly>;
  auto mul = [&](const Pair& u, const Pair& v) -> Pair {
    const FqPoly ac = u.first * v.first;
    return {u.first * v.second + u.second * v.first - ac * h, ac * f + u.second * v.second};
  };
  Pair acc{FqPoly(z), FqPoly::constant(z.one_like())};
  Pair base{FqPoly::constant(z.one_like()), FqPoly(z)};
  for (Int e = n; e > 0; e >>= 1) {
    if (mpz_odd_p(e.get_mpz_t())) acc = mul(acc, base);
    if (e > 1) base = mul(base, base);
  }
  return acc;
}

FqMap frobenius_endomorphism(const Curve& E) {
  const Int& q = curve_field(E)->order();
  const FieldElement z = E.zero();
  const auto [A, B] = y_power(E, q);
  using R = RationalFunction<FieldElement>;
  const unsigned long qq = q.get_ui();
  FqMap m{E, E, R(FqPoly::monomial(z.one_like(), qq)), R(A), R(B), q, MapKind::isogeny};
  return m;
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  if (ctx == nullptr || EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx, data.data(), data.size()) != 1 || EVP_DigestFinal_ex(ctx, digest, &len) != 1) {
    EVP_MD_CTX_free(ctx);
    throw InternalError("SHA-256 computation failed");
  }
  EVP_MD_CTX_free(ctx);
  std::ostringstream os;
  for (unsigned i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return os.str();
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CapabilityError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

ModularPolyDB::ModularPolyDB(const std::string& dir) : dir_(dir) {
  std::istringstream manifest(read_file(dir + "/MANIFEST"));
  std::string digest;
  std::string name;
  while (manifest >> digest >> name) {
    unsigned l = 0;
    if (std::sscanf(name.c_str(), "phi_%u.txt", &l) != 1) throw InternalError("bad MANIFEST entry " + name);
    const std::string body = read_file(dir + "/" + name);
    if (sha256_hex(body) != digest) throw InternalError("checksum mismatch for " + name);
    Monomials mons;
    std::istringstream lines(body);
    unsigned i = 0;
    unsigned j = 0;
    std::string c;
    while (lines >> i >> j >> c) mons.emplace_back(i, j, parse_int(c));
    polys_.emplace(l, std::move(mons));
  }
}

std::string ModularPolyDB::default_dir() {
  if (const char* env = std::getenv("SSDDH_MODPOLY_DIR"); env != nullptr && *env != '\0') return env;
  return SSDDH_DEFAULT_MODPOLY_DIR;
}

const ModularPolyDB& ModularPolyDB::default_db() {
  static const ModularPolyDB db(default_dir());
  return db;
}

std::vector<unsigned> ModularPolyDB::available() const {
  std::vector<unsigned> out;
  for (const auto& [l, m] : polys_) out.push_back(l);
  return out;
}

const ModularPolyDB::Monomials& ModularPolyDB::monomials(unsigned l) const {
  auto it = polys_.find(l);
  if (it == polys_.end()) throw CapabilityError("modular polynomial Phi_" + std::to_string(l) + " not in database");
  return it->second;
}

Int ModularPolyDB::evaluate(unsigned l, const Int& x, const Int& y) const {
  Int acc = 0;
  for (const auto& [i, j, c] : monomials(l)) acc += c * ipow(x, i) * ipow(y, j);
  return acc;
}

FqPoly ModularPolyDB::specialize(unsigned l, const FieldElement& x) const {
  const auto& mons = monomials(l);
  std::vector<FieldElement> coeffs(l + 2, x.zero_like());
  std::vector<FieldElement> xpow{x.one_like()};
  for (unsigned i = 1; i <= l + 1; ++i) xpow.push_back(xpow.back() * x);
  for (const auto& [i, j, c] : mons) coeffs[j] += xpow[i] * x.constant(c);
  return FqPoly(x.zero_like(), std::move(coeffs));
}

std::vector<FieldElement> modular_roots(unsigned l, const FieldElement& j, const ModularPolyDB& db) {
  return poly_roots(db.specialize(l, j));
}

namespace {

void cycle_dfs(const FieldElement& j0, const ModularPolyDB& db, std::vector<unsigned>& remaining,
               IsogenyCycle& path, std::vector<IsogenyCycle>& out, size_t limit) {
  if (out.size() >= limit) return;
  if (remaining.empty()) {
    if (path.j_path.back() == j0) out.push_back(path);
    return;
  }
  std::set<unsigned> tried;
  for (size_t idx = 0; idx < remaining.size(); ++idx) {
    const unsigned l = remaining[idx];
    if (!tried.insert(l).second) continue;
    remaining.erase(remaining.begin() + static_cast<long>(idx));
    for (const auto& next : modular_roots(l, path.j_path.back(), db)) {
      path.degrees.push_back(l);
      path.j_path.push_back(next);
      cycle_dfs(j0, db, remaining, path, out, limit);
      path.degrees.pop_back();
      path.j_path.pop_back();
    }
    remaining.insert(remaining.begin() + static_cast<long>(idx), l);
  }
}

}  // namespace

std::vector<IsogenyCycle> isogeny_cycles(const FieldElement& j0, std::vector<unsigned> primes,
                                         const ModularPolyDB& db, size_t limit) {
  std::vector<IsogenyCycle> out;
  if (primes.empty()) return out;
  std::sort(primes.begin(), primes.end());
  IsogenyCycle path{{}, {j0}};
  cycle_dfs(j0, db, primes, path, out, limit);
  return out;
}

std::optional<IsogenyCycle> isogeny_cycle_search(const Curve& E, const std::vector<unsigned>& primes,
                                                 const ModularPolyDB& db) {
  const FieldPtr& F = curve_field(E);
  const Curve E2 = base_change(E, Embedding(F, extension_of(F, 2)));
  auto cycles = isogeny_cycles(E2.j_invariant(), primes, db, 1);
  if (cycles.empty()) return std::nullopt;
  return cycles.front();
}

std::vector<FqMap> realize_cycle(const Curve& E2, const IsogenyCycle& cycle, size_t limit) {
  std::vector<FqMap> partial{identity_map(E2)};
  for (size_t step = 0; step < cycle.degrees.size(); ++step) {
    std::vector<FqMap> next;
    for (const auto& m : partial) {
      for (const auto& K : kernel_polynomials(m.target, cycle.degrees[step])) {
        FqMap phi = velu_isogeny(m.target, K);
        if (phi.target.j_invariant() != cycle.j_path[step + 1]) continue;
        next.push_back(step == 0 ? phi : compose(phi, m));
        if (next.size() >= limit) break;
      }
    }
    partial = std::move(next);
  }
  std::vector<FqMap> out;
  for (const auto& m : partial) {
    for (const auto& [u, r, s, t] : isomorphism_parameters(m.target, E2)) {
      out.push_back(compose(weierstrass_isomorphism(m.target, u, r, s, t), m));
      if (out.size() >= limit) return out;
    }
  }
  return out;
}

DistortionSpec construct_distortion(const Curve& E, const Int& order, const Int& d, const Int& r,
                                    const ModularPolyDB& db) {
  const FieldPtr& F = curve_field(E);
  const Int& p = F->characteristic();
  const CurveClassification cls = curve_classify(E, order);
  if (!cls.supersingular) throw ArgumentError("construct_distortion: curve is not supersingular");
  if (cls.embedding_degree_one) throw ArgumentError("construct_distortion: embedding degree 1 case excluded");
  if (d <= 0) throw ArgumentError("d must be positive");
  if (!is_prime(r) || r == p || d % r == 0) throw ArgumentError("need a prime r with r not dividing p*d");
  if (r == 2 || (r == 3 && (p == 3 || cls.waterhouse_case == WaterhouseCase::pm_sqrt_q))) {
    throw ArgumentError("r = " + to_string(r) + " is outside the range where the construction applies");
  }
  std::vector<unsigned> primes;
  for (const auto& [l, e] : factor(d)) {
    if (!l.fits_uint_p() || !db.has(static_cast<unsigned>(l.get_ui()))) {
      throw CapabilityError("prime " + to_string(l) + " of d has no modular polynomial in the database");
    }
    for (unsigned i = 0; i < e; ++i) primes.push_back(static_cast<unsigned>(l.get_ui()));
  }
  if (primes.empty()) throw ArgumentError("d = 1 requests no non-trivial endomorphism");

  const Curve E2 = base_change(E, Embedding(F, extension_of(F, 2)));
  const auto cycles = isogeny_cycles(E2.j_invariant(), primes, db);
  if (cycles.empty()) throw NotFoundError("no degree-d cycle");

  const Int minus_d = mod(-d, r);
  std::optional<DistortionSpec> fallback;
  for (const auto& cycle : cycles) {
    for (auto& psi : realize_cycle(E2, cycle)) {
      if (!verify_distortion(E, order, psi, r)) continue;
      DistortionSpec spec{E, order, psi, d, {}, {}, "isogeny-cycle"};
      certify(spec, r);
      const bool squares_to_minus_d =
          !spec.psi_squared.empty() &&
          (spec.psi_squared.front().second == minus_d || spec.psi_squared.front().second == mod(d, r));
      if (squares_to_minus_d) return spec;
      if (!fallback) fallback = std::move(spec);
    }
  }
  if (fallback) return *fallback;
  throw NotFoundError("candidate rejected: no cycle yields a map passing verify_distortion");
}

}  // namespace ssddh
