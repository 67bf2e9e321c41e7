#include "rmjac/json_io.hpp"

namespace rmjac {

namespace {

std::uint64_t u64_from_decimal(const std::string& s) {
  Int v = from_decimal(s);
  if (v < 0 || v >= Int(1) << 62)
    throw Error(ErrorKind::BadParameter, "coefficient out of word range: " + s);
  return (std::uint64_t)v;
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw Error(ErrorKind::BadParameter, std::string("missing JSON field: ") + key);
  return j.at(key);
}

}  // namespace

Json to_json(const FieldDesc& d) {
  Json j;
  j["p"] = std::to_string(d.p());
  if (!d.is_prime_field()) {
    Json ext = Json::array();
    for (auto c : d.modulus()) ext.push_back(std::to_string(c));
    j["ext"] = std::move(ext);
  }
  return j;
}

FieldRef field_from_json(const Json& j) {
  std::uint64_t p = u64_from_decimal(require(j, "p").get<std::string>());
  if (!j.contains("ext")) return FieldDesc::prime_field(p);
  std::vector<std::uint64_t> mod;
  for (const auto& c : j.at("ext")) mod.push_back(u64_from_decimal(c.get<std::string>()));
  return FieldDesc::extension(p, std::move(mod));
}

Json to_json(const Fq& x) {
  Json coeffs = Json::array();
  for (auto c : x.coeffs()) coeffs.push_back(std::to_string(c));
  return Json{{"coeffs", std::move(coeffs)}};
}

Fq fq_from_json(const FieldRef& d, const Json& j) {
  std::vector<std::uint64_t> coeffs;
  for (const auto& c : require(j, "coeffs")) coeffs.push_back(u64_from_decimal(c.get<std::string>()));
  return Fq::from_coeffs(d, std::move(coeffs));
}

Json to_json(const Poly& f) {
  Json coeffs = Json::array();
  for (const Fq& c : f.coeffs()) coeffs.push_back(to_json(c));
  return Json{{"coeffs", std::move(coeffs)}};
}

Poly poly_from_json(const FieldRef& d, const Json& j) {
  std::vector<Fq> coeffs;
  for (const auto& c : require(j, "coeffs")) coeffs.push_back(fq_from_json(d, c));
  return Poly::from_coeffs(d, std::move(coeffs));
}

Json to_json(const RatFun& f) {
  return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

RatFun ratfun_from_json(const FieldRef& d, const Json& j) {
  return RatFun(poly_from_json(d, require(j, "num")),
                poly_from_json(d, require(j, "den")));
}

Json to_json(const Curve& c) {
  return Json{{"field", to_json(*c.field())}, {"f", to_json(c.f())}};
}

CurveRef curve_from_json(const Json& j) {
  FieldRef d = field_from_json(require(j, "field"));
  return Curve::make(d, poly_from_json(d, require(j, "f")));
}

Json to_json(const Divisor& d) {
  return Json{{"a", to_json(d.a())}, {"b", to_json(d.b())}};
}

Divisor divisor_from_json(const CurveRef& curve, const Json& j) {
  const FieldRef& d = curve->field();
  return Divisor(curve, poly_from_json(d, require(j, "a")),
                 poly_from_json(d, require(j, "b")));
}

Json to_json(const Endomorphism& e) {
  Json mp = Json::array();
  for (const Int& c : e.min_poly) mp.push_back(to_decimal(c));
  return Json{{"t1", to_json(e.t1())}, {"n1", to_json(e.n1())}, {"min_poly", std::move(mp)}};
}

Json to_json(const FamilyParams& p) {
  Json j;
  j["family"] = family_name(p.family);
  if (p.family == Family::ArtinSchreier) j["p"] = p.p_or_n;
  else if (p.family == Family::Cyclotomic) j["n"] = p.p_or_n;
  j["t"] = to_json(p.t);
  j["tau"] = p.tau ? to_json(*p.tau) : Json(nullptr);
  j["s"] = p.s ? to_json(*p.s) : Json(nullptr);
  j["field"] = to_json(*p.field);
  return j;
}

FamilyParams params_from_json(const Json& j) {
  FamilyParams p;
  p.family = family_from_name(require(j, "family").get<std::string>());
  p.field = field_from_json(require(j, "field"));
  p.t = fq_from_json(p.field, require(j, "t"));
  switch (p.family) {
    case Family::ArtinSchreier:
      p.p_or_n = require(j, "p").get<int>();
      break;
    case Family::Cyclotomic:
      p.p_or_n = require(j, "n").get<int>();
      break;
    case Family::MestreG2: p.p_or_n = 5; break;
    case Family::MestreG3: p.p_or_n = 7; break;
  }
  if (j.contains("tau") && !j.at("tau").is_null())
    p.tau = fq_from_json(p.field, j.at("tau"));
  if (j.contains("s") && !j.at("s").is_null())
    p.s = fq_from_json(p.field, j.at("s"));
  return p;
}

Json to_json(const CurveBundle& b) {
  Json j;
  j["family_params"] = to_json(b.params);
  j["field"] = to_json(*b.field);
  j["curve"] = to_json(*b.curve);
  j["endo"] = to_json(b.endo);
  j["subgroup_order"] = b.subgroup_order ? Json(to_decimal(*b.subgroup_order)) : Json(nullptr);
  j["eigenvalue"] = b.eigenvalue ? Json(to_decimal(*b.eigenvalue)) : Json(nullptr);
  return j;
}

CurveBundle bundle_from_json(const Json& j) {
  CurveBundle b = make_bundle(params_from_json(require(j, "family_params")));
  if (j.contains("curve")) {
    CurveRef given = curve_from_json(j.at("curve"));
    if (!given->same(*b.curve))
      throw Error(ErrorKind::BadParameter, "curve descriptor does not match family parameters");
  }
  if (j.contains("endo")) {
    const Json& e = j.at("endo");
    RatFun t1 = ratfun_from_json(b.field, require(e, "t1"));
    RatFun n1 = ratfun_from_json(b.field, require(e, "n1"));
    if (t1 != b.endo.t1() || n1 != b.endo.n1())
      throw Error(ErrorKind::BadParameter, "endomorphism data does not match family parameters");
  }
  if (j.contains("subgroup_order") && !j.at("subgroup_order").is_null())
    b.subgroup_order = from_decimal(j.at("subgroup_order").get<std::string>());
  if (j.contains("eigenvalue") && !j.at("eigenvalue").is_null())
    b.eigenvalue = from_decimal(j.at("eigenvalue").get<std::string>());
  return b;
}

Json to_json(const LPolynomial& l) {
  Json coeffs = Json::array();
  for (const Int& c : l.coeffs) coeffs.push_back(to_decimal(c));
  return Json{{"order", to_decimal(l.value_at_one())}, {"l_poly", std::move(coeffs)}};
}

}  // namespace rmjac
