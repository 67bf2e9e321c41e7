#ifndef RMJAC_JSON_IO_HPP
#define RMJAC_JSON_IO_HPP

#include "rmjac/bundle.hpp"
#include "rmjac/glv.hpp"
#include "rmjac/order.hpp"

#include <json.hpp>

namespace rmjac {

// Key order is fixed so that equal inputs serialize byte-identically.
using Json = nlohmann::ordered_json;

// {"p": "<decimal>", "ext": ["<c0>", ..., "1"]}; "ext" omitted for F_p.
Json to_json(const FieldDesc& d);
FieldRef field_from_json(const Json& j);

// {"coeffs": ["<c0>", ...]}, little-endian, length k.
Json to_json(const Fq& x);
Fq fq_from_json(const FieldRef& d, const Json& j);

// {"coeffs": [<FieldElement>, ...]}, little-endian.
Json to_json(const Poly& f);
Poly poly_from_json(const FieldRef& d, const Json& j);

// {"num": <Polynomial>, "den": <Polynomial>}.
Json to_json(const RatFun& f);
RatFun ratfun_from_json(const FieldRef& d, const Json& j);

// {"field": <FieldDesc>, "f": <Polynomial>}.
Json to_json(const Curve& c);
CurveRef curve_from_json(const Json& j);

// {"a": <Polynomial>, "b": <Polynomial>}.
Json to_json(const Divisor& d);
Divisor divisor_from_json(const CurveRef& curve, const Json& j);

// {"t1": ..., "n1": ..., "min_poly": ["<c0>", ..., "1"]}.
Json to_json(const Endomorphism& e);

Json to_json(const FamilyParams& p);
FamilyParams params_from_json(const Json& j);

Json to_json(const CurveBundle& b);
// Rebuilds from family_params and cross-checks any embedded curve/endo
// descriptors against the rebuilt ones.
CurveBundle bundle_from_json(const Json& j);

Json to_json(const LPolynomial& l);

}  // namespace rmjac

#endif
