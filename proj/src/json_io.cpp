#include "ssddh/json_io.hpp"

namespace ssddh::json_io {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw FormatError(what); }

const Json& field_of(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing key '") + key + "'");
  return j.at(key);
}

}  // namespace

Json to_json(const Int& n) { return to_string(n); }

Int int_from_json(const Json& j) {
  if (j.is_string()) {
    try {
      return parse_int(j.get<std::string>());
    } catch (const std::exception&) {
      malformed("not a decimal integer: " + j.get<std::string>());
    }
  }
  if (j.is_number_integer()) return Int(j.get<long>());
  malformed("expected an integer");
}

Json to_json(const FieldDesc& f) {
  Json mod = Json::array();
  for (const auto& c : f.modulus()) mod.push_back(to_json(c));
  return {{"p", to_json(f.characteristic())}, {"m", f.degree()}, {"modulus", mod}};
}

FieldPtr field_from_json(const Json& j) {
  const Int p = int_from_json(field_of(j, "p"));
  if (!j.contains("modulus")) {
    const unsigned m = j.contains("m") ? j.at("m").get<unsigned>() : 1;
    return FieldDesc::extension(p, m);
  }
  std::vector<Int> mod;
  for (const auto& c : j.at("modulus")) mod.push_back(int_from_json(c));
  if (j.contains("m") && j.at("m").get<unsigned>() + 1 != mod.size()) malformed("m disagrees with modulus length");
  return FieldDesc::with_modulus(p, std::move(mod));
}

Json to_json(const FieldElement& x) {
  Json a = Json::array();
  for (const auto& c : x.coeffs()) a.push_back(to_json(c));
  return a;
}

FieldElement element_from_json(const FieldPtr& f, const Json& j) {
  if (!j.is_array()) return FieldElement::from_int(f, int_from_json(j));
  if (j.size() > f->degree()) malformed("field element has more coefficients than the field degree");
  std::vector<Int> c;
  for (const auto& v : j) c.push_back(int_from_json(v));
  return FieldElement::from_coeffs(f, std::move(c));
}

Json to_json(const Curve& E) {
  Json a = Json::array();
  for (const auto* c : {&E.a1(), &E.a2(), &E.a3(), &E.a4(), &E.a6()}) a.push_back(to_json(*c));
  return {{"field", to_json(*curve_field(E))}, {"a", a}};
}

Curve curve_from_json(const Json& j) {
  const FieldPtr f = field_from_json(field_of(j, "field"));
  const Json& a = field_of(j, "a");
  if (!a.is_array() || a.size() != 5) malformed("curve needs five coefficients [a1, a2, a3, a4, a6]");
  return Curve(element_from_json(f, a[0]), element_from_json(f, a[1]), element_from_json(f, a[2]),
               element_from_json(f, a[3]), element_from_json(f, a[4]));
}

Json to_json(const CurvePoint& P, unsigned ext) {
  if (P.is_identity()) return "identity";
  return {{"x", to_json(P.x())}, {"y", to_json(P.y())}, {"ext", ext}};
}

CurvePoint point_from_json(const Curve& E, const Json& j, unsigned* ext) {
  if (j.is_string()) {
    if (j.get<std::string>() != "identity") malformed("a point is \"identity\" or {x, y, ext}");
    if (ext != nullptr) *ext = 1;
    return CurvePoint::identity();
  }
  const unsigned k = j.contains("ext") ? j.at("ext").get<unsigned>() : 1;
  if (k == 0) malformed("ext must be positive");
  const FieldPtr& F = curve_field(E);
  const FieldPtr Fk = k == 1 ? F : extension_of(F, k);
  CurvePoint P(element_from_json(Fk, field_of(j, "x")), element_from_json(Fk, field_of(j, "y")));
  const Curve Ek = k == 1 ? E : base_change(E, Embedding(F, Fk));
  if (!Ek.contains(P)) throw ArgumentError("point is not on the curve");
  if (ext != nullptr) *ext = k;
  return P;
}

Json to_json(const FqPoly& f) {
  Json a = Json::array();
  for (const auto& c : f.coeffs()) a.push_back(to_json(c));
  return a;
}

Json to_json(const RationalFunction<FieldElement>& f) { return {{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

Json to_json(const FqMap& m) {
  return {{"source", to_json(m.source)},
          {"target", to_json(m.target)},
          {"maps", Json::array({to_json(m.x_map), to_json(m.y_coeff), to_json(m.y_const)})},
          {"degree", to_json(m.degree)},
          {"kind", to_string(m.kind)}};
}

namespace {

RationalFunction<FieldElement> rational_from_json(const FieldPtr& f, const Json& j) {
  auto poly = [&](const Json& a) {
    if (!a.is_array()) malformed("polynomial must be a coefficient array");
    std::vector<FieldElement> c;
    for (const auto& v : a) c.push_back(element_from_json(f, v));
    return FqPoly(FieldElement::zero(f), std::move(c));
  };
  return RationalFunction<FieldElement>(poly(field_of(j, "num")), poly(field_of(j, "den")));
}

}  // namespace

FqMap map_from_json(const Json& j) {
  const Curve source = curve_from_json(field_of(j, "source"));
  const Curve target = curve_from_json(field_of(j, "target"));
  const FieldPtr& f = curve_field(source);
  if (!same_field(f, curve_field(target))) throw ArgumentError("source and target fields differ");
  const Json& maps = field_of(j, "maps");
  if (!maps.is_array() || maps.size() != 3) malformed("maps must be [X, Y_y, Y_0]");
  const std::string kind = j.value("kind", std::string("isogeny"));
  if (kind != "isogeny" && kind != "isomorphism") malformed("kind must be isogeny or isomorphism");
  FqMap m{source,
          target,
          rational_from_json(f, maps[0]),
          rational_from_json(f, maps[1]),
          rational_from_json(f, maps[2]),
          int_from_json(field_of(j, "degree")),
          kind == "isogeny" ? MapKind::isogeny : MapKind::isomorphism};
  if (!m.lands_on_target()) throw ArgumentError("map does not send source to target");
  return m;
}

Json to_json(const DistortionSpec& spec) {
  Json cert = Json::array();
  for (const auto& c : spec.certified_for) cert.push_back({{"r", to_json(c.r)}, {"eigenspace", c.eigenspace}});
  Json sq = Json::array();
  for (const auto& [r, l] : spec.psi_squared) sq.push_back({{"r", to_json(r)}, {"lambda", to_json(l)}});
  return {{"curve", to_json(spec.curve)},
          {"order", to_json(spec.order)},
          {"map", to_json(spec.map)},
          {"d", spec.d ? Json(to_json(*spec.d)) : Json(nullptr)},
          {"certified_for", cert},
          {"psi_squared", sq},
          {"label", spec.label}};
}

DistortionSpec distortion_from_json(const Json& j) {
  DistortionSpec spec{curve_from_json(field_of(j, "curve")),
                      Int(0),
                      map_from_json(field_of(j, "map")),
                      std::nullopt,
                      {},
                      {},
                      j.value("label", std::string())};
  spec.order = j.contains("order") ? int_from_json(j.at("order")) : naive_point_count(spec.curve);
  if (j.contains("d") && !j.at("d").is_null()) spec.d = int_from_json(j.at("d"));
  for (const auto& c : j.value("certified_for", Json::array())) {
    spec.certified_for.push_back({int_from_json(field_of(c, "r")), field_of(c, "eigenspace").get<std::string>()});
  }
  for (const auto& s : j.value("psi_squared", Json::array())) {
    spec.psi_squared.emplace_back(int_from_json(field_of(s, "r")), int_from_json(field_of(s, "lambda")));
  }
  return spec;
}

Json to_json(const CurveClassification& c) {
  return {{"order", to_json(c.order)},
          {"trace", to_json(c.trace)},
          {"supersingular", c.supersingular},
          {"waterhouse_case", to_string(c.waterhouse_case)},
          {"embedding_degree_one", c.embedding_degree_one}};
}

Json to_json(const std::set<Place>& places) {
  Json a = Json::array();
  for (const auto& v : places) a.push_back(v.to_string());
  return a;
}

Json to_json(const DaggerCertificate& c) {
  return {{"q", to_json(c.q)},
          {"t", to_json(c.t)},
          {"s", to_json(c.s)},
          {"holds", c.holds},
          {"ramified", to_json(c.ramified)}};
}

Json to_json(const IsogenyCycle& c) {
  Json path = Json::array();
  for (const auto& j : c.j_path) path.push_back(to_json(j));
  return {{"degrees", c.degrees}, {"j_path", path}};
}

Json pairing_value(const FieldElement& v, const Int& r) {
  return {{"value", to_json(v)}, {"field", to_json(*v.field())}, {"r", to_json(r)}};
}

}  // namespace ssddh::json_io
