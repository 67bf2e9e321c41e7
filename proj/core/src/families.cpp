#include "rmjac/families.hpp"

namespace rmjac {

const char* family_name(Family f) {
  switch (f) {
    case Family::ArtinSchreier: return "artin_schreier";
    case Family::Cyclotomic: return "cyclotomic";
    case Family::MestreG2: return "mestre_g2";
    case Family::MestreG3: return "mestre_g3";
  }
  return "unknown";
}

Family family_from_name(const std::string& name) {
  if (name == "artin_schreier") return Family::ArtinSchreier;
  if (name == "cyclotomic") return Family::Cyclotomic;
  if (name == "mestre_g2") return Family::MestreG2;
  if (name == "mestre_g3") return Family::MestreG3;
  throw Error(ErrorKind::BadParameter, "unknown family: " + name);
}

std::vector<Int> dickson(int n) {
  if (n < 0) throw Error(ErrorKind::BadParameter, "dickson degree must be >= 0");
  std::vector<Int> d0{2};
  if (n == 0) return d0;
  std::vector<Int> d1{0, 1};
  if (n == 1) return d1;
  for (int i = 2; i <= n; ++i) {
    std::vector<Int> next(i + 1, Int(0));
    for (std::size_t j = 0; j < d1.size(); ++j) next[j + 1] = d1[j];
    for (std::size_t j = 0; j < d0.size(); ++j) next[j] -= d0[j];
    d0 = std::move(d1);
    d1 = std::move(next);
  }
  return d1;
}

Poly dickson_poly(const FieldRef& d, int n) {
  return Poly::from_ints(d, dickson(n));
}

std::vector<Int> min_poly_eta5() { return {Int(-1), Int(1), Int(1)}; }
std::vector<Int> min_poly_eta7() { return {Int(-1), Int(-2), Int(1), Int(1)}; }

namespace {

CurveRef make_curve_or_singular(const FieldRef& d, Poly f) {
  try {
    return Curve::make(d, std::move(f));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotSquarefree)
      throw Error(ErrorKind::SingularCurve, "parameters give a singular model");
    throw;
  }
}

}  // namespace

CurveWithEndo make_artin_schreier(const FieldRef& d, int p, const Fq& t) {
  if (p != 5 && p != 7)
    throw Error(ErrorKind::BadParameter, "p must be 5 or 7");
  if ((int)d->p() != p)
    throw Error(ErrorKind::WrongCharacteristic,
                "field characteristic must equal p = " + std::to_string(p));
  if (!t.field()->same(*d)) throw Error(ErrorKind::MixedFields, "t not in the field");
  if (t.is_zero()) throw Error(ErrorKind::SingularCurve, "t = 0 gives a singular model");

  // f = u (u^((p-1)/2) - 1)^2 - 4t
  Poly x = Poly::x(d);
  Poly g = x.pow((p - 1) / 2) - Poly::one(d);
  Poly f = x * g * g + Poly(t * Fq::from_int(d, -4));
  CurveRef curve = make_curve_or_singular(d, std::move(f));

  RatFun t1(Poly::from_ints(d, {Int(2), Int(2)}));           // 2(u+1)
  RatFun n1(Poly::from_ints(d, {Int(1), Int(-2), Int(1)}));  // (u-1)^2
  auto mp = p == 5 ? min_poly_eta5() : min_poly_eta7();
  return {curve, make_endomorphism(curve, t1, n1, std::move(mp))};
}

CurveWithEndo make_cyclotomic(const FieldRef& d, int n, const Fq& t,
                              std::optional<Fq> tau) {
  if (n != 5 && n != 7)
    throw Error(ErrorKind::BadParameter, "n must be 5 or 7");
  if ((int)d->p() == n || d->p() == 2)
    throw Error(ErrorKind::BadParameter, "characteristic must not divide 2n");
  if (!t.field()->same(*d)) throw Error(ErrorKind::MixedFields, "t not in the field");

  auto trace_ints = n == 5 ? min_poly_eta5() : min_poly_eta7();
  Poly trace_poly = Poly::from_ints(d, trace_ints);
  Fq tau_val = Fq::zero(d);
  if (tau) {
    if (!tau->field()->same(*d))
      throw Error(ErrorKind::MixedFields, "tau not in the field");
    if (!trace_poly.eval(*tau).is_zero())
      throw Error(ErrorKind::BadParameter, "tau is not a root of the trace polynomial");
    tau_val = *tau;
  } else {
    Rng rng(0x7a07a);
    auto roots = poly_roots(trace_poly, rng);
    if (roots.empty())
      throw Error(ErrorKind::NoTauInField,
                  "the trace polynomial has no root in this field");
    tau_val = roots.front().first;
  }

  Poly f = dickson_poly(d, n) + Poly(t);
  CurveRef curve = make_curve_or_singular(d, std::move(f));

  RatFun t1(Poly::from_coeffs(d, {Fq::zero(d), tau_val}));  // tau*u
  Fq c0 = tau_val * tau_val - Fq::from_int(d, 4);
  RatFun n1(Poly::from_coeffs(d, {c0, Fq::zero(d), Fq::one(d)}));  // u^2 + tau^2 - 4
  return {curve, make_endomorphism(curve, t1, n1, std::move(trace_ints))};
}

CurveWithEndo make_mestre_g2(const FieldRef& d, const Fq& s, const Fq& t) {
  if (!s.field()->same(*d) || !t.field()->same(*d))
    throw Error(ErrorKind::MixedFields, "parameters not in the field");
  if (s.is_zero() || s.is_one())
    throw Error(ErrorKind::BadParameter, "s must avoid {0, 1}");

  Poly x = Poly::x(d);
  Poly xs = x - Poly(s);
  Poly f = x.pow(4) * xs
         - (x + Poly::one(d)) * xs.pow(3) * s
         + x.pow(3) * (s * s * s)
         - x.pow(2) * xs.pow(2) * t;
  CurveRef curve = make_curve_or_singular(d, std::move(f));

  Fq one = Fq::one(d);
  Poly u2 = Poly::x(d).pow(2);
  // t1 = -s((s-1)u - s)/u^2,  n1 = s^2(u + s)/u^2
  Poly t1_num = Poly::from_coeffs(d, {s * s, -(s * (s - one))});
  Poly n1_num = Poly::from_coeffs(d, {s * s * s, s * s});
  RatFun t1(t1_num, u2), n1(n1_num, u2);
  return {curve, make_endomorphism(curve, t1, n1, min_poly_eta5())};
}

CurveWithEndo make_mestre_g3(const FieldRef& d, const Fq& s, const Fq& t) {
  if (!s.field()->same(*d) || !t.field()->same(*d))
    throw Error(ErrorKind::MixedFields, "parameters not in the field");
  if (s.is_zero() || s.is_one())
    throw Error(ErrorKind::BadParameter, "s must avoid {0, 1}");

  Fq one = Fq::one(d);
  Fq sm1 = s - one;
  Fq s2 = s * s, s3 = s2 * s, s4 = s3 * s, s6 = s4 * s2, s8 = s4 * s4, s10 = s8 * s2;
  auto C = [&](const Int& v) { return Fq::from_int(d, v); };

  Poly x = Poly::x(d);
  // psi = u (u - s^2(s-1)) (u - s(s-1))
  Poly psi = x * (x - Poly(s2 * sm1)) * (x - Poly(s * sm1));
  Fq sm1_2 = sm1 * sm1, sm1_3 = sm1_2 * sm1, sm1_4 = sm1_2 * sm1_2;
  Fq sm1_5 = sm1_4 * sm1, sm1_6 = sm1_4 * sm1_2;
  Fq c5 = s * sm1 * (s2 - s + one) * (s3 + C(2) * s2 - C(5) * s + one);
  Fq c4 = -(s3 * sm1_2 *
            (C(6) * s4 - C(11) * s3 + C(12) * s2 - C(11) * s - one));
  Fq c3 = s4 * sm1_3 * (s2 - s - one) * (s3 + C(2) * s2 + C(6) * s + one);
  Fq c2 = -(s6 * sm1_4 * (s + one) * (C(3) * s2 - C(5) * s - C(3)));
  Fq c1 = s8 * sm1_5 * (s2 - C(3) * s - C(3));
  Fq c0 = s10 * sm1_6;
  Poly phi = x * psi * psi +
             Poly::from_coeffs(d, {c0, c1, c2, c3, c4, c5});
  Poly f = phi - psi * psi * t;
  CurveRef curve = make_curve_or_singular(d, std::move(f));

  Poly u2 = Poly::x(d).pow(2);
  // t1 = s^2(s-1)((s^2-s-1)u + s^2(s-1))/u^2
  // n1 = -s^4(s-1)^2(u + s^2(s-1))/u^2
  Fq a = s2 * sm1;
  Poly t1_num = Poly::from_coeffs(d, {a * s2 * sm1, a * (s2 - s - one)});
  Fq b = -(s4 * sm1_2);
  Poly n1_num = Poly::from_coeffs(d, {b * s2 * sm1, b});
  RatFun t1(t1_num, u2), n1(n1_num, u2);
  return {curve, make_endomorphism(curve, t1, n1, min_poly_eta7())};
}

CurveWithEndo make_family(const FamilyParams& params) {
  if (!params.field) throw Error(ErrorKind::BadParameter, "missing field");
  switch (params.family) {
    case Family::ArtinSchreier:
      return make_artin_schreier(params.field, params.p_or_n, params.t);
    case Family::Cyclotomic:
      return make_cyclotomic(params.field, params.p_or_n, params.t, params.tau);
    case Family::MestreG2:
      if (!params.s) throw Error(ErrorKind::BadParameter, "mestre_g2 requires s");
      return make_mestre_g2(params.field, *params.s, params.t);
    case Family::MestreG3:
      if (!params.s) throw Error(ErrorKind::BadParameter, "mestre_g3 requires s");
      return make_mestre_g3(params.field, *params.s, params.t);
  }
  throw Error(ErrorKind::BadParameter, "unknown family");
}

}  // namespace rmjac
