#include "rmjac/jacobian.hpp"

#include <cassert>

namespace rmjac {

CurveRef Curve::make(FieldRef field, Poly f) {
  if (field->p() == 2)
    throw Error(ErrorKind::CharacteristicTwo, "characteristic 2 not supported");
  if (f.is_zero() || f.degree() < 5 || f.degree() % 2 == 0)
    throw Error(ErrorKind::EvenDegree, "f must have odd degree >= 5");
  if (!f.lc().is_one()) throw Error(ErrorKind::NotMonic, "f must be monic");
  if (!f.field()->same(*field))
    throw Error(ErrorKind::MixedFields, "f not over the given field");
  Poly g = Poly::gcd(f, f.derivative());
  if (!g.is_one()) throw Error(ErrorKind::NotSquarefree, "f has a repeated root");
  int genus = (f.degree() - 1) / 2;
  return CurveRef(new Curve(std::move(field), std::move(f), genus));
}

Divisor::Divisor(CurveRef curve, Poly a, Poly b)
    : curve_(std::move(curve)), a_(std::move(a)), b_(std::move(b)) {
  if (a_.is_zero()) throw Error(ErrorKind::InvalidDivisor, "a must be nonzero");
  if (!a_.lc().is_one()) throw Error(ErrorKind::InvalidDivisor, "a must be monic");
  if (!a_.field()->same(*curve_->field()) || !b_.field()->same(*curve_->field()))
    throw Error(ErrorKind::MixedFields, "divisor polynomials over a different field");
  if (!b_.is_zero() && b_.degree() >= a_.degree())
    throw Error(ErrorKind::InvalidDivisor, "deg b must be < deg a");
  Poly check = b_ * b_ - curve_->f();
  if (!Poly::divmod(check, a_).second.is_zero())
    throw Error(ErrorKind::InvalidDivisor, "a does not divide b^2 - f");
}

Divisor Divisor::identity(const CurveRef& curve) {
  return Divisor(curve, Poly::one(curve->field()), Poly::zero(curve->field()));
}

bool Divisor::operator==(const Divisor& o) const {
  return curve_->same(*o.curve_) && a_ == o.a_ && b_ == o.b_;
}

std::string Divisor::str() const {
  return "(" + a_.str() + ", v - (" + b_.str() + "))";
}

Divisor point_divisor(const CurveRef& curve, const Fq& u0, const Fq& v0) {
  const FieldRef& d = curve->field();
  Poly a = Poly::from_coeffs(d, {-u0, Fq::one(d)});
  return Divisor(curve, a, Poly(v0));
}

Reduction cantor_reduce(const CurveRef& curve, Poly a, Poly b) {
  const Poly& f = curve->f();
  const int g = curve->genus();
  if (a.is_zero()) throw Error(ErrorKind::InvalidDivisor, "a must be nonzero");
  a = a.monic();
  if (!b.is_zero() && (a.is_one() || b.degree() >= a.degree())) b = b.mod(a);
  if (!Poly::divmod(b * b - f, a).second.is_zero())
    throw Error(ErrorKind::InvalidDivisor, "a does not divide b^2 - f");
  int initial_deg = a.is_one() ? 0 : a.degree();
  int iterations = 0;
  while (!a.is_one() && a.degree() > g) {
    a = Poly::div_exact(f - b * b, a);
    a = a.monic();
    b = (-b).mod(a);
    ++iterations;
  }
  int bound = initial_deg > g ? (initial_deg - g + 1) / 2 : 0;
  if (iterations > bound)
    throw Error(ErrorKind::Internal, "reduction exceeded its iteration bound");
  return Reduction{Divisor(curve, std::move(a), std::move(b)), iterations};
}

Divisor jac_add(const Divisor& P, const Divisor& Q) {
  if (!P.curve()->same(*Q.curve()))
    throw Error(ErrorKind::MixedCurves, "divisors on different curves");
  if (P.is_identity()) return Q;
  if (Q.is_identity()) return P;

  const CurveRef& curve = P.curve();
  const Poly& f = curve->f();
  const Poly &a1 = P.a(), &b1 = P.b(), &a2 = Q.a(), &b2 = Q.b();

  // Composition: d = gcd(a1, a2, b1 + b2) = s1*a1 + s2*a2 + s3*(b1+b2)
  auto [d1, e1, e2] = Poly::xgcd(a1, a2);
  Poly a, b;
  if (d1.is_one()) {
    a = a1 * a2;
    // b = b1 + e1*a1*(b2 - b1) mod a  (CRT: b = b1 mod a1, b = b2 mod a2)
    b = (b1 + e1 * a1 * (b2 - b1)).mod(a);
  } else {
    auto [d, c1, c2] = Poly::xgcd(d1, b1 + b2);
    Poly s1 = c1 * e1, s2 = c1 * e2, s3 = c2;
    Poly ad = Poly::div_exact(a1, d);
    a = ad * Poly::div_exact(a2, d);
    Poly num = s1 * a1 * b2 + s2 * a2 * b1 + s3 * (b1 * b2 + f);
    b = Poly::div_exact(num, d).mod(a);
  }
  return cantor_reduce(curve, std::move(a), std::move(b)).divisor;
}

Divisor jac_neg(const Divisor& P) {
  if (P.is_identity()) return P;
  Poly nb = (-P.b()).mod(P.a());
  return Divisor(P.curve(), P.a(), std::move(nb));
}

Divisor jac_scalar_mul(const Divisor& P, const Int& k) {
  if (k == 0) return Divisor::identity(P.curve());
  if (k < 0) return jac_scalar_mul(jac_neg(P), -k);
  Divisor acc = P;
  unsigned nbits = bitlen(k);
  for (unsigned i = nbits - 1; i-- > 0;) {
    acc = jac_add(acc, acc);
    if (boost::multiprecision::bit_test(k, i)) acc = jac_add(acc, P);
  }
  return acc;
}

Divisor random_divisor(const CurveRef& curve, Rng& rng) {
  const FieldRef& d = curve->field();
  const int g = curve->genus();
  int npoints = 1 + (int)rng.below((std::uint64_t)g);
  Divisor acc = Divisor::identity(curve);
  int consecutive_failures = 0;
  for (int j = 0; j < npoints;) {
    Fq u = Fq::random(d, rng);
    Fq fu = curve->f().eval(u);
    auto v = fu.sqrt();
    if (!v) {
      if (++consecutive_failures >= 100 * g)
        throw Error(ErrorKind::FieldTooSmall, "no curve points found after 100*g samples");
      continue;
    }
    consecutive_failures = 0;
    Fq v0 = rng.coin() ? -*v : *v;
    acc = jac_add(acc, point_divisor(curve, u, v0));
    ++j;
  }
  return acc;
}

Divisor random_divisor(const CurveRef& curve, std::uint64_t seed) {
  Rng rng(seed);
  return random_divisor(curve, rng);
}

}  // namespace rmjac
