#include "ssddh/curve_ff.hpp"

#include <numeric>

namespace ssddh {

Curve make_curve(const FieldPtr& field, const std::vector<Int>& a) {
  if (a.size() != 5) throw ArgumentError("curve needs five coefficients a1, a2, a3, a4, a6");
  auto f = [&](size_t i) { return FieldElement::from_int(field, a[i]); };
  return Curve(f(0), f(1), f(2), f(3), f(4));
}

const FieldPtr& curve_field(const Curve& E) { return E.a1().field(); }

Curve base_change(const Curve& E, const Embedding& emb) {
  return E.map_coefficients([&](const FieldElement& c) { return emb.lift(c); });
}

CurvePoint lift_point(const CurvePoint& P, const Embedding& emb) {
  if (P.is_identity()) return P;
  return CurvePoint(emb.lift(P.x()), emb.lift(P.y()));
}

Poly<FieldElement> lift_poly(const Poly<FieldElement>& f, const Embedding& emb) { return emb.lift(f); }

FqMap lift_map(const FqMap& m, const Embedding& emb) {
  using R = RationalFunction<FieldElement>;
  auto lf = [&](const R& f) { return R(emb.lift(f.num()), emb.lift(f.den())); };
  return {base_change(m.source, emb), base_change(m.target, emb), lf(m.x_map), lf(m.y_coeff), lf(m.y_const),
          m.degree, m.kind};
}

namespace {

FieldElement rhs(const Curve& E, const FieldElement& x) {
  return ((x + E.a2()) * x + E.a4()) * x + E.a6();
}

// Solutions of z^2 + z = c in characteristic 2.
std::vector<FieldElement> artin_schreier_roots(const FieldElement& c) {
  if (absolute_trace(c) != 0) return {};
  const unsigned m = c.field()->degree();
  FieldElement z = c.zero_like();
  if (m % 2 == 1) {
    // half-trace
    FieldElement term = c;
    for (unsigned i = 0; i <= (m - 1) / 2; ++i) {
      z += term;
      term = term * term;
      term = term * term;
    }
    std::vector<FieldElement> out{z, z + c.one_like()};
    std::sort(out.begin(), out.end(), lex_less);
    return out;
  }
  return poly_roots(FqPoly(c.zero_like(), {-c, c.one_like(), c.one_like()}));
}

}  // namespace

std::vector<FieldElement> lift_x(const Curve& E, const FieldElement& x) {
  const FieldElement h = E.a1() * x + E.a3();
  const FieldElement f = rhs(E, x);
  std::vector<FieldElement> ys;
  if (x.characteristic() == 2) {
    if (h.is_zero()) {
      ys.push_back(*sqrt(f));
    } else {
      for (const auto& z : artin_schreier_roots(f / (h * h))) ys.push_back(z * h);
    }
  } else {
    const FieldElement disc = h * h + f * x.constant(4L);
    auto s = sqrt(disc);
    if (!s) return {};
    const FieldElement half = x.constant(2L).inverse();
    ys.push_back((*s - h) * half);
    if (!s->is_zero()) ys.push_back((-*s - h) * half);
  }
  std::sort(ys.begin(), ys.end(), lex_less);
  return ys;
}

Int naive_point_count(const Curve& E) {
  const FieldPtr& F = curve_field(E);
  const Int& Q = F->order();
  if (Q > kNaiveCountLimit) {
    throw CapabilityError("field of order " + to_string(Q) + " too large to count; supply #E");
  }
  const Int& p = F->characteristic();
  Int count = 1;
  if (F->degree() == 1 && p != 2) {
    // Quadratic character of 4x^3 + b2 x^2 + 2 b4 x + b6 over F_p.
    const Int b2 = E.b2().coeffs()[0], b4 = E.b4().coeffs()[0], b6 = E.b6().coeffs()[0];
    for (Int x = 0; x < p; ++x) {
      const Int d = mod(((4 * x + b2) * x + 2 * b4) * x + b6, p);
      count += 1 + mpz_jacobi(d.get_mpz_t(), p.get_mpz_t());
    }
    return count;
  }
  for (Int i = 0; i < Q; ++i) {
    const FieldElement x = FieldElement::from_index(F, i);
    if (p == 2) {
      const FieldElement h = E.a1() * x + E.a3();
      if (h.is_zero()) {
        count += 1;
      } else if (absolute_trace(rhs(E, x) / (h * h)) == 0) {
        count += 2;
      }
    } else {
      const FieldElement h = E.a1() * x + E.a3();
      const FieldElement d = h * h + rhs(E, x) * x.constant(4L);
      if (d.is_zero()) {
        count += 1;
      } else if (d.pow((Q - 1) / 2).is_one()) {
        count += 2;
      }
    }
  }
  return count;
}

std::vector<CurvePoint> enumerate_points(const Curve& E) {
  const FieldPtr& F = curve_field(E);
  if (F->order() > kNaiveCountLimit) throw CapabilityError("field too large to enumerate");
  std::vector<CurvePoint> out{CurvePoint::identity()};
  for (Int i = 0; i < F->order(); ++i) {
    const FieldElement x = FieldElement::from_index(F, i);
    for (auto& y : lift_x(E, x)) out.emplace_back(x, std::move(y));
  }
  return out;
}

CurvePoint random_point(const Curve& E, Rng& rng) {
  const FieldPtr& F = curve_field(E);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const FieldElement x = FieldElement::from_index(F, rng.below(F->order()));
    auto ys = lift_x(E, x);
    if (ys.empty()) continue;
    return CurvePoint(x, ys[static_cast<size_t>(rng.below(Int(static_cast<unsigned long>(ys.size()))).get_ui())]);
  }
  throw InternalError("random_point: no affine point found");
}

std::string to_string(WaterhouseCase c) {
  switch (c) {
    case WaterhouseCase::trace_zero: return "t=0";
    case WaterhouseCase::pm_sqrt_q: return "t=+-p^(a/2)";
    case WaterhouseCase::pm_two_sqrt_q: return "t=+-2p^(a/2)";
    case WaterhouseCase::pm_sqrt_pq: return "t=+-p^((a+1)/2)";
    case WaterhouseCase::ordinary: return "ordinary";
  }
  return "?";
}

CurveClassification curve_classify(const Curve& E, const Int& order) {
  const FieldPtr& F = curve_field(E);
  const Int& q = F->order();
  const Int& p = F->characteristic();
  const unsigned a = F->degree();
  CurveClassification c;
  c.order = order;
  c.trace = q + 1 - order;
  if (c.trace * c.trace > 4 * q) throw ArgumentError("order " + to_string(order) + " violates the Hasse bound");
  c.supersingular = mod(c.trace, p) == 0;
  if (!c.supersingular) return c;
  const Int at = abs(c.trace);
  if (at == 0) {
    c.waterhouse_case = WaterhouseCase::trace_zero;
  } else if (a % 2 == 0 && at == ipow(p, a / 2)) {
    c.waterhouse_case = WaterhouseCase::pm_sqrt_q;
  } else if (a % 2 == 0 && at == 2 * ipow(p, a / 2)) {
    c.waterhouse_case = WaterhouseCase::pm_two_sqrt_q;
    c.embedding_degree_one = true;
  } else if (a % 2 == 1 && at == ipow(p, (a + 1) / 2)) {
    c.waterhouse_case = WaterhouseCase::pm_sqrt_pq;
  } else {
    throw ArgumentError("trace " + to_string(c.trace) + " is not a supersingular Waterhouse value");
  }
  return c;
}

unsigned embedding_degree(const Int& q, const Int& r) {
  Int g;
  mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), r.get_mpz_t());
  if (g != 1) throw ArgumentError("embedding degree needs gcd(r, q) = 1");
  const Int qr = mod(q, r);
  Int acc = qr;
  for (unsigned k = 1; k <= kMaxEmbeddingDegree; ++k) {
    if (acc == mod(Int(1), r)) return k;
    acc = mod(acc * qr, r);
  }
  throw CapabilityError("embedding degree exceeds " + std::to_string(kMaxEmbeddingDegree));
}

Int order_over_extension(const Int& q, const Int& trace, unsigned k) {
  if (k == 0) throw ArgumentError("extension degree must be positive");
  // s_i = alpha^i + beta^i with s_0 = 2, s_1 = t, s_{i+1} = t s_i - q s_{i-1}
  Int prev = 2;
  Int cur = trace;
  for (unsigned i = 1; i < k; ++i) {
    Int next = trace * cur - q * prev;
    prev = cur;
    cur = next;
  }
  return ipow(q, k) + 1 - cur;
}

CurvePoint frobenius_point(const CurvePoint& P, const Int& q) {
  if (P.is_identity()) return P;
  return CurvePoint(P.x().pow(q), P.y().pow(q));
}

namespace {

CurvePoint point_of_order(const Curve& Ek, const Int& N, const Int& r, Rng& rng) {
  if (N % r != 0) throw ArgumentError(to_string(r) + " does not divide the group order " + to_string(N));
  Int h = N;
  while (h % r == 0) h /= r;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    CurvePoint R = Ek.mul(h, random_point(Ek, rng));
    if (R.is_identity()) continue;
    for (CurvePoint next = Ek.mul(r, R); !next.is_identity(); next = Ek.mul(r, R)) R = next;
    return R;
  }
  throw InternalError("random_point_of_order: retries exhausted");
}

}  // namespace

CurvePoint random_point_of_order(const Curve& E, const Int& order, const Int& r, unsigned k, Rng& rng) {
  const FieldPtr& F = curve_field(E);
  const Int trace = F->order() + 1 - order;
  const Embedding emb(F, extension_of(F, k));
  const Curve Ek = base_change(E, emb);
  return point_of_order(Ek, order_over_extension(F->order(), trace, k), r, rng);
}

TorsionContext::TorsionContext(const Curve& E, const Int& order, const Int& r, unsigned extra)
    : base_(E),
      order_(order),
      q_(curve_field(E)->order()),
      trace_(q_ + 1 - order),
      r_(r),
      k_(embedding_degree(q_, r)),
      degree_(k_ * extra),
      emb_(curve_field(E), extension_of(curve_field(E), degree_)),
      curve_(base_change(E, emb_)),
      order_k_(order_over_extension(q_, trace_, degree_)) {
  if (!is_prime(r)) throw ArgumentError("r must be prime");
  if (order_k_ % r != 0) throw ArgumentError("r does not divide #E over the torsion field");
}

CurvePoint TorsionContext::trace_map(const CurvePoint& P) const {
  CurvePoint acc = P;
  CurvePoint cur = P;
  for (unsigned i = 1; i < k_; ++i) {
    cur = frobenius(cur);
    acc = curve_.add(acc, cur);
  }
  return acc;
}

bool TorsionContext::has_order_r(const CurvePoint& P) const {
  return !P.is_identity() && curve_.contains(P) && curve_.mul(r_, P).is_identity();
}

CurvePoint TorsionContext::random_point_of_order_r(Rng& rng) const {
  return point_of_order(curve_, order_k_, r_, rng);
}

CurvePoint TorsionContext::one_eigenspace_generator(Rng& rng) const {
  if (order_ % r_ != 0) throw ArgumentError("r does not divide #E(F_q); 1-eigenspace is trivial");
  return lift(point_of_order(base_, order_, r_, rng));
}

CurvePoint TorsionContext::q_eigenspace_generator(Rng& rng) const {
  if (k_ < 2) throw CapabilityError("unsupported: k = 1");
  const Int kinv = inverse_mod(Int(k_), r_);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const CurvePoint R = random_point_of_order_r(rng);
    const CurvePoint Rq = curve_.sub(R, curve_.mul(kinv, trace_map(R)));
    if (!Rq.is_identity()) return Rq;
  }
  throw InternalError("q-eigenspace sampling: retries exhausted");
}

TorsionContext::Eigenspace TorsionContext::eigenspace_of(const CurvePoint& P) const {
  if (!has_order_r(P)) throw ArgumentError("eigenspace_of: point does not have order r");
  const CurvePoint fp = frobenius(P);
  if (fp == P) return Eigenspace::one;
  if (fp == curve_.mul(mod(q_, r_), P)) return Eigenspace::q;
  return Eigenspace::mixed;
}

FqMap TorsionContext::lift_map(const FqMap& m) const {
  const FieldPtr& mid = curve_field(m.source);
  const FieldPtr& top = field();
  if (top->degree() % mid->degree() != 0) {
    throw ArgumentError("map field " + mid->to_string() + " does not embed in the torsion field");
  }
  const Embedding e = compatible_embedding(Embedding(curve_field(base_), mid), emb_);
  FqMap lifted = ssddh::lift_map(m, e);
  if (lifted.source != curve_) throw ArgumentError("map source is not the curve of this context");
  return lifted;
}

std::string to_string(TorsionContext::Eigenspace e) {
  switch (e) {
    case TorsionContext::Eigenspace::one: return "one";
    case TorsionContext::Eigenspace::q: return "q";
    case TorsionContext::Eigenspace::mixed: return "mixed";
  }
  return "?";
}

}  // namespace ssddh
