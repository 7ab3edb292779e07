// Acceptance report: one PASS/FAIL line per criterion. Exit status is 0 only
// when every line passes.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "ssddh/catalog.hpp"
#include "ssddh/ddh.hpp"
#include "ssddh/isogeny.hpp"
#include "ssddh/quaternion.hpp"
#include "support.hpp"

using namespace ssddh;

namespace {

// Wall-clock budgets in seconds. Every algebraic comparison is exact.
constexpr double kBudgetTable = 60;
constexpr double kBudgetConstructionPerPrime = 30;
constexpr double kBudgetHilbert = 10;
constexpr double kBudgetDdh = 60;
constexpr double kBudgetModpoly = 60;

constexpr int kHilbertSamples = 1000;
constexpr int kModpolyCurvesPerPrime = 50;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[" << what << "] ";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

using QF = Poly<QuadNumber>;
using QR = RationalFunction<QuadNumber>;

bool same(const QR& a, const QR& b) { return (a - b).is_zero(); }

// ---------------------------------------------------------------------------

void table_families(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  struct Case {
    const char* family;
    long p;
    long r;
  };
  for (const Case& c : {Case{"row1", 59, 5}, Case{"row2", 19, 5}, Case{"row3", 5, 7}, Case{"row4", 2, 5},
                        Case{"row5", 3, 7}}) {
    const auto spec = builtin_distortion(c.family, c.p);
    const auto rep = verify_distortion_exhaustive(spec.curve, spec.order, spec.map, c.r);
    o.require(rep.ok(), std::string(c.family) + " failures");
    o.detail << c.family << " r=" << c.r << ": " << rep.one_checked + rep.q_checked << " points, "
             << rep.one_failures + rep.q_failures << " failures; ";
  }
  const double s = seconds_since(t0);
  o.require(s < kBudgetTable, "over time budget");
  o.detail << s << " s";
}

void d8_reproduction(Outcome& o) {
  const long D = -2;
  auto c = [&](long a, long b = 1) { return QuadNumber(D, Rational(a, b)); };
  const WeierstrassCurve<QuadNumber> E(c(0), c(1), c(0), c(-3), c(1));
  const auto phi = velu_isogeny(E, QF(c(0), {c(-1), c(1)}), VeluModel::short_weierstrass);
  const QR x_expected(QF(c(0), {c(5), c(-2), c(3)}), QF(c(0), {c(-3), c(3)}));
  const QR y_expected(QF(c(0), {c(-1), c(-2), c(1)}), QF(c(0), {c(1), c(-2), c(1)}));
  o.require(same(phi.x_map, x_expected), "isogeny X");
  o.require(same(phi.y_coeff, y_expected) && phi.y_const.is_zero(), "isogeny Y");
  const auto& T = phi.target;
  o.require(T.a1().is_zero() && T.a2().is_zero() && T.a3().is_zero() && T.a4() == c(-40, 3) &&
                T.a6() == c(-448, 27),
            "target curve");
  // (x, y) -> (-x/2 - 1/3, +-sqrt(-2) y / 4): u = -+sqrt(-2)/2.
  const auto iso = find_isomorphism(T, E);
  bool iso_ok = iso.has_value();
  if (iso) {
    const QR x_iso(QF(c(0), {c(-1, 3), c(-1, 2)}));
    const QuadNumber quarter_root(D, 0, Rational(1, 4));
    const QR y_plus(QF::constant(quarter_root));
    const QR y_minus(QF::constant(-quarter_root));
    iso_ok = same(iso->x_map, x_iso) && iso->y_const.is_zero() &&
             (same(iso->y_coeff, y_plus) || same(iso->y_coeff, y_minus));
    o.detail << "isomorphism y-scale " << iso->y_coeff.to_string() << "; ";
  }
  o.require(iso_ok, "isomorphism");
  o.detail << "isogeny and target match exactly";
}

// The D-7 reduction at p: E(F_{p^2}) points of order dividing r.
std::vector<CurvePoint> torsion_points(const Curve& E2, const Int& r) {
  std::vector<CurvePoint> out;
  for (const auto& P : enumerate_points(E2))
    if (E2.mul(r, P).is_identity()) out.push_back(P);
  return out;
}

// Number of Q in pts with pi(psi(Q)) = -psi(pi(Q)).
size_t anticommuting(const FqMap& psi, const std::vector<CurvePoint>& pts, const Int& p) {
  const Curve& E = psi.source;
  size_t n = 0;
  for (const auto& Q : pts) n += frobenius_point(psi(Q), p) == E.negate(psi(frobenius_point(Q, p)));
  return n;
}

void d7_reproduction(Outcome& o) {
  const long D = -7;
  auto c = [&](long a, long b = 1) { return QuadNumber(D, Rational(a, b)); };
  auto w = [&](long a, long b, long den) { return QuadNumber(D, Rational(a, den), Rational(b, den)); };
  const WeierstrassCurve<QuadNumber> E(c(1), c(-1), c(0), c(-2), c(-1));
  const auto phi = velu_isogeny(E, QF(c(0), {w(5, 1, 8), c(1)}));  // kernel x = -2 alpha
  const bool coeffs = phi.target.a4() == w(-29, -105, 32) && phi.target.a6() == w(-849, 595, 128);
  o.require(coeffs, "A4/A6");
  o.detail << "A4, A6 " << (coeffs ? "exact" : "differ") << "; ";

  // Anticommutation at p = 5 on E(F_25)[r] for the smallest prime r > 3 | #E(F_25).
  const Int p = 5;
  const auto spec = cm_reduce("D-7", p);
  const Curve& E2 = spec.map.source;
  const auto all = enumerate_points(E2);
  const Int n2 = Int(static_cast<unsigned long>(all.size()));
  std::optional<Int> r;
  for (const auto& [f, e] : factor(n2)) {
    (void)e;
    if (f > 3 && !r) r = f;
  }
  if (r) {
    const auto pts = torsion_points(E2, *r);
    const size_t anti = anticommuting(spec.map, pts, p);
    o.require(anti == pts.size(), "anticommutation");
    o.detail << "p=5 r=" << *r << ": pi psi = -psi pi on " << anti << "/" << pts.size() << "; ";
  } else {
    o.require(false, "no prime r > 3 divides #E(F_25)");
    o.detail << "#E(F_25)=" << n2 << " has no prime factor > 3; pi psi = -psi pi on "
             << anticommuting(spec.map, all, p) << "/" << all.size() << " points of E(F_25); ";
  }

  // Same property on E(F_{19^2})[5], the first inert prime with such an r.
  {
    const auto spec19 = cm_reduce("D-7", 19);
    const auto pts = torsion_points(spec19.map.source, 5);
    o.detail << "p=19 r=5: pi psi = -psi pi on " << anticommuting(spec19.map, pts, 19) << "/" << pts.size()
             << "; ";
  }

  // Kernel x = 2 branch, reduced mod 5: every isomorphism back, checked with r = 3.
  const auto phi2 = velu_isogeny(E, QF(c(0), {c(-2), c(1)}));
  const FieldElement root = *sqrt(FieldElement::from_int(FieldDesc::extension(p, 2), -7));
  auto red = [&](const QuadNumber& z) { return reduce_quadratic(z, root); };
  const auto m = map_coefficients(phi2, root, red);
  const auto params = isomorphism_parameters(m.target, m.source);
  const Int r3 = 3;
  size_t accepted = 0;
  for (const auto& [u, rr, s, t] : params) {
    const auto psi = compose(weierstrass_isomorphism(m.target, u, rr, s, t), m);
    accepted += verify_distortion(spec.curve, spec.order, psi, r3);
  }
  o.require(accepted == 0, "kernel x = 2 branch not rejected");
  o.detail << "kernel x=2 at p=5: j(E')=" << phi2.target.j_invariant().to_string() << ", " << accepted << "/"
           << params.size() << " composites pass verify_distortion (r=3)";
}

void construction(Outcome& o) {
  for (long p : {5L, 13L, 29L, 37L}) {
    const auto t0 = std::chrono::steady_clock::now();
    const Curve E = make_curve(FieldDesc::prime(p), {0, 1, 0, -3, 1});
    const Int n = naive_point_count(E);
    Int r = 0;
    for (const auto& [f, e] : factor(n)) {
      (void)e;
      if (f != 2 && f != p) r = f;
    }
    try {
      const auto spec = construct_distortion(E, n, 2, r);
      const auto rep = verify_distortion_report(E, n, spec.map, r);
      const Int lambda = spec.psi_squared.empty() ? Int(-1) : spec.psi_squared.front().second;
      const bool sq = lambda == mod(Int(-2), r) || lambda == mod(Int(2), r);
      const double s = seconds_since(t0);
      o.require(rep.ok() && sq && spec.map.degree == 2 && s < kBudgetConstructionPerPrime,
                "p=" + std::to_string(p));
      o.detail << "p=" << p << " r=" << r << " deg=" << spec.map.degree << " psi^2=[" << lambda << "] "
               << (rep.ok() ? "verified" : "unverified") << " " << s << " s; ";
    } catch (const std::exception& e) {
      o.require(false, "p=" + std::to_string(p) + ": " + e.what());
    }
  }
}

void hilbert_layer(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(2024);
  int product_fail = 0;
  for (int i = 0; i < kHilbertSamples; ++i) {
    Int m = 0;
    Int n = 0;
    while (m == 0) m = rng.below(20001) - 10000;
    while (n == 0) n = rng.below(20001) - 10000;
    int prod = hilbert_symbol(m, n, Place::infinity());
    for (const auto& [q, e] : factor(2 * m * n)) {
      (void)e;
      prod *= hilbert_symbol(m, n, Place::prime(q));
    }
    product_fail += prod != 1;
  }
  o.require(product_fail == 0, "product formula");

  int ram_checked = 0;
  int ram_fail = 0;
  for (long p = 3; p < 200; p += 4) {
    if (!is_prime(p)) continue;
    ++ram_checked;
    ram_fail += ramified_set(-p, -1) != std::set<Place>{Place::prime(p), Place::infinity()};
  }
  o.require(ram_fail == 0, "ramified_set(-p, -1)");

  int dagger_checked = 0;
  int dagger_fail = 0;
  for (long p = 2; p < 50; ++p) {
    if (!is_prime(p)) continue;
    for (unsigned a = 1; a <= 2; ++a) {
      const Int q = ipow(p, a);
      const Int bound = sqrt(Int(4 * q));
      for (Int t = -bound; t <= bound; ++t) {
        try {
          choose_s_row(p, a, t);
        } catch (const ArgumentError&) {
          continue;
        }
        const Int r = p == 5 ? 7 : 5;
        ++dagger_checked;
        dagger_fail += !check_dagger(q, t, choose_s(p, a, t, r)).holds;
      }
    }
  }
  o.require(dagger_fail == 0 && dagger_checked > 0, "dagger");
  const double s = seconds_since(t0);
  o.require(s < kBudgetHilbert, "over time budget");
  o.detail << kHilbertSamples << " product-formula samples, " << product_fail << " failures; " << ram_checked
           << " primes p = 3 mod 4, " << ram_fail << " failures; " << dagger_checked << " admissible (p, a, t), "
           << dagger_fail << " failures; " << s << " s";
}

void ddh_correctness(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& [family, p] : std::vector<std::pair<std::string, long>>{{"row1", 59}, {"row4", 2}}) {
    const Int r = 5;
    const auto spec = builtin_distortion(family, p);
    const TorsionContext ctx = context_for(spec.curve, spec.order, r, spec.map);
    const Curve& E = ctx.curve();
    Rng rng(7);
    const auto P = ctx.one_eigenspace_generator(rng);
    const auto Q = ctx.q_eigenspace_generator(rng);
    long wrong = 0;
    long total = 0;
    for (const auto& G : {P, Q, E.add(P, Q)}) {
      const auto mult = testing::multiples(E, G, r);
      for (const auto& A : mult) {
        for (const auto& B : mult) {
          for (const auto& C : mult) {
            const Int a = *testing::bsgs(E, G, A, r);
            const Int b = *testing::bsgs(E, G, B, r);
            const Int c = *testing::bsgs(E, G, C, r);
            const bool truth = mod(a * b - c, r) == 0;
            wrong += solve_ddh(ctx, G, A, B, C, &spec).valid != truth;
            ++total;
          }
        }
      }
    }
    const auto mp = testing::multiples(E, P, r);
    const auto mq = testing::multiples(E, Q, r);
    long co_wrong = 0;
    for (const auto& A : mp) {
      for (const auto& C : mq) {
        const bool truth = *testing::bsgs(E, P, A, r) == *testing::bsgs(E, Q, C, r);
        co_wrong += solve_co_ddh(E, P, A, Q, C, r).valid != truth;
      }
    }
    o.require(wrong == 0 && co_wrong == 0, family);
    o.detail << family << " k=" << ctx.k() << ": " << total << " DDH tuples, " << wrong << " wrong; "
             << mp.size() * mq.size() << " co-DDH tuples, " << co_wrong << " wrong; ";
  }
  const double s = seconds_since(t0);
  o.require(s < kBudgetDdh, "over time budget");
  o.detail << s << " s";
}

void modpoly_integrity(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto& db = ModularPolyDB::default_db();
  o.require(db.evaluate(2, 8000, 8000) == 0, "Phi_2(8000, 8000)");
  Rng rng(99);
  std::map<unsigned, long> checked;
  long failures = 0;
  for (long p : {11L, 23L, 59L}) {
    const auto F = FieldDesc::extension(p, 2);
    for (int i = 0; i < kModpolyCurvesPerPrime; ++i) {
      std::optional<Curve> E;
      while (!E) {
        try {
          E.emplace(testing::random_element(F, rng), testing::random_element(F, rng),
                    testing::random_element(F, rng), testing::random_element(F, rng),
                    testing::random_element(F, rng));
        } catch (const ArgumentError&) {
        }
      }
      const FieldElement j = E->j_invariant();
      for (unsigned l : {2u, 3u, 5u, 7u}) {
        const FqPoly phi_j = db.specialize(l, j);
        for (const auto& K : kernel_polynomials(*E, l)) {
          const auto iso = velu_isogeny(*E, K);
          ++checked[l];
          failures += !phi_j(iso.target.j_invariant()).is_zero();
        }
      }
    }
  }
  o.require(failures == 0, "Phi_l(j, j') != 0");
  for (unsigned l : {2u, 3u, 5u, 7u}) o.require(checked[l] > 0, "no " + std::to_string(l) + "-isogenies sampled");
  const double s = seconds_since(t0);
  o.require(s < kBudgetModpoly, "over time budget");
  o.detail << "Phi_2(8000, 8000) = 0; isogenies checked l=2:" << checked[2] << " l=3:" << checked[3]
           << " l=5:" << checked[5] << " l=7:" << checked[7] << ", " << failures << " failures; " << s << " s";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"table families exhaustive", table_families},
      {"D-8 isogeny and isomorphism", d8_reproduction},
      {"D-7 isogeny and Frobenius relation", d7_reproduction},
      {"distortion construction on D-8 reductions", construction},
      {"Hilbert symbol layer", hilbert_layer},
      {"DDH correctness", ddh_correctness},
      {"modular polynomial integrity", modpoly_integrity},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
