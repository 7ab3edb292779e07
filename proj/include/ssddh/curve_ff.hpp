#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ssddh/curve.hpp"
#include "ssddh/ffpoly.hpp"
#include "ssddh/rational_map.hpp"

namespace ssddh {

using Curve = WeierstrassCurve<FieldElement>;
using CurvePoint = Point<FieldElement>;
using FqMap = RationalMap<FieldElement>;

// Curves at or below this field size can be counted by naive_point_count.
inline const Int kNaiveCountLimit = Int(1) << 24;
// Largest embedding degree embedding_degree() will report.
constexpr unsigned kMaxEmbeddingDegree = 24;

Curve make_curve(const FieldPtr& field, const std::vector<Int>& a);
const FieldPtr& curve_field(const Curve& E);

Curve base_change(const Curve& E, const Embedding& emb);
CurvePoint lift_point(const CurvePoint& P, const Embedding& emb);
Poly<FieldElement> lift_poly(const Poly<FieldElement>& f, const Embedding& emb);
FqMap lift_map(const FqMap& m, const Embedding& emb);

// Throws CapabilityError above kNaiveCountLimit.
Int naive_point_count(const Curve& E);

// All points of E over its field, identity first. Desk-scale only.
std::vector<CurvePoint> enumerate_points(const Curve& E);

// y-coordinates above x, sorted by lex_less.
std::vector<FieldElement> lift_x(const Curve& E, const FieldElement& x);

CurvePoint random_point(const Curve& E, Rng& rng);

enum class WaterhouseCase { trace_zero, pm_sqrt_q, pm_two_sqrt_q, pm_sqrt_pq, ordinary };
std::string to_string(WaterhouseCase c);

struct CurveClassification {
  Int order;
  Int trace;
  bool supersingular = false;
  WaterhouseCase waterhouse_case = WaterhouseCase::ordinary;
  // t = +-2 p^(a/2): embedding degree 1, excluded from pairing-based work.
  bool embedding_degree_one = false;
};

CurveClassification curve_classify(const Curve& E, const Int& order);

unsigned embedding_degree(const Int& q, const Int& r);

// #E(F_{q^k}) from #E(F_q) = q + 1 - t.
Int order_over_extension(const Int& q, const Int& trace, unsigned k);

// x^q, y^q coordinatewise.
CurvePoint frobenius_point(const CurvePoint& P, const Int& q);

/// The r-torsion of E/F_q realized over F_{q^K}, where K is a multiple of the
/// embedding degree k. All pairing-facing operations work on this object.
class TorsionContext {
 public:
  // extra multiplies the field degree beyond k (to host a map's constants).
  TorsionContext(const Curve& E, const Int& order, const Int& r, unsigned extra = 1);

  const Curve& base() const { return base_; }
  const Curve& curve() const { return curve_; }
  const FieldPtr& field() const { return curve_field(curve_); }
  const Embedding& embedding() const { return emb_; }
  const Int& q() const { return q_; }
  const Int& r() const { return r_; }
  const Int& order() const { return order_; }
  const Int& trace() const { return trace_; }
  unsigned k() const { return k_; }
  // Degree of the point field over F_q.
  unsigned degree() const { return degree_; }

  CurvePoint frobenius(const CurvePoint& P) const { return frobenius_point(P, q_); }
  // sum_{i<k} pi^i(P)
  CurvePoint trace_map(const CurvePoint& P) const;
  CurvePoint lift(const CurvePoint& P) const { return lift_point(P, emb_); }

  bool has_order_r(const CurvePoint& P) const;
  CurvePoint random_point_of_order_r(Rng& rng) const;
  // Generators of the 1- and q-eigenspaces of E[r].
  CurvePoint one_eigenspace_generator(Rng& rng) const;
  CurvePoint q_eigenspace_generator(Rng& rng) const;

  enum class Eigenspace { one, q, mixed };
  Eigenspace eigenspace_of(const CurvePoint& P) const;

  // Lifts a map defined over a subfield of the point field, keeping the
  // embedding compatible with the one used for base().
  FqMap lift_map(const FqMap& m) const;

 private:
  Curve base_;
  Int order_;
  Int q_;
  Int trace_;
  Int r_;
  unsigned k_;
  unsigned degree_;
  Embedding emb_;
  Curve curve_;
  Int order_k_;  // #E over the point field
};

std::string to_string(TorsionContext::Eigenspace e);

CurvePoint random_point_of_order(const Curve& E, const Int& order, const Int& r, unsigned k, Rng& rng);

}  // namespace ssddh
