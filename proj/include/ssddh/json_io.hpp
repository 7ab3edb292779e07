#pragma once

#include <stdexcept>

#include "json.hpp"

#include "ssddh/distortion.hpp"
#include "ssddh/isogeny.hpp"
#include "ssddh/quaternion.hpp"

namespace ssddh::json_io {

using Json = nlohmann::json;

// Well-formed JSON whose shape does not match the expected schema.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// All integers are written as decimal strings; readers also accept JSON
// numbers for hand-written input.
Json to_json(const Int& n);
Int int_from_json(const Json& j);

Json to_json(const FieldDesc& f);
FieldPtr field_from_json(const Json& j);

Json to_json(const FieldElement& x);
FieldElement element_from_json(const FieldPtr& f, const Json& j);

Json to_json(const Curve& E);
Curve curve_from_json(const Json& j);

// ext is the degree of the point's field over the curve's field.
Json to_json(const CurvePoint& P, unsigned ext);
// Point over extension_of(curve field, ext), identity for "identity".
CurvePoint point_from_json(const Curve& E, const Json& j, unsigned* ext = nullptr);

Json to_json(const FqPoly& f);
Json to_json(const RationalFunction<FieldElement>& f);
Json to_json(const FqMap& m);
// The map's field is the source curve's field.
FqMap map_from_json(const Json& j);

Json to_json(const DistortionSpec& spec);
DistortionSpec distortion_from_json(const Json& j);

Json to_json(const CurveClassification& c);
Json to_json(const DaggerCertificate& c);
Json to_json(const std::set<Place>& places);
Json to_json(const IsogenyCycle& c);

// {"value": FieldElement, "field": FieldDesc, "r": "5"}
Json pairing_value(const FieldElement& v, const Int& r);

}  // namespace ssddh::json_io
