#include "rmjac/endo.hpp"

#include "rmjac/embed.hpp"

#include <cassert>

namespace rmjac {

const RatFun& TNTables::nij(int i, int j) const {
  if (i > j) std::swap(i, j);
  return n[i][j - i];
}

TNTables rational_maps(const RatFun& t1, const RatFun& n1, int genus) {
  if (genus < 1) throw Error(ErrorKind::BadParameter, "genus must be >= 1");
  if (!t1.field()->same(*n1.field()))
    throw Error(ErrorKind::MixedFields, "t1 and n1 over different fields");
  const FieldRef& d = t1.field();

  TNTables tab;
  tab.genus = genus;
  tab.t.resize(genus + 1, RatFun::zero(d));
  tab.t[0] = RatFun(Poly::from_ints(d, {Int(2)}));
  tab.t[1] = t1;
  for (int i = 2; i <= genus; ++i)
    tab.t[i] = t1 * tab.t[i - 1] - n1 * tab.t[i - 2];

  std::vector<RatFun> npow(genus + 1, RatFun::one(d));
  for (int i = 1; i <= genus; ++i) npow[i] = npow[i - 1] * n1;

  tab.n.resize(genus + 1);
  for (int i = 0; i <= genus; ++i) {
    tab.n[i].resize(genus - i + 1, RatFun::zero(d));
    tab.n[i][0] = npow[i];
    for (int j = i + 1; j <= genus; ++j)
      tab.n[i][j - i] = npow[i] * tab.t[j - i];
  }
  tab.e2_den = Poly::lcm(t1.den(), n1.den());
  return tab;
}

namespace {

void check_degree(const TNTables& tab, const Poly& a) {
  if (!a.is_zero() && a.degree() > tab.genus)
    throw Error(ErrorKind::DegreeTooLarge, "argument degree exceeds the genus");
}

}  // namespace

RatFun apply_T(const TNTables& tab, const Poly& a) {
  check_degree(tab, a);
  const FieldRef& d = tab.e2_den.field();
  RatFun acc = RatFun::zero(d);
  for (int i = 0; i < (int)a.coeffs().size(); ++i) {
    const Fq& c = a.coeffs()[i];
    if (!c.is_zero()) acc = acc + tab.t[i] * c;
  }
  return acc;
}

RatFun apply_N(const TNTables& tab, const Poly& a) {
  check_degree(tab, a);
  const FieldRef& d = tab.e2_den.field();
  RatFun acc = RatFun::zero(d);
  const auto& c = a.coeffs();
  for (int i = 0; i < (int)c.size(); ++i) {
    if (c[i].is_zero()) continue;
    for (int j = i; j < (int)c.size(); ++j) {
      if (c[j].is_zero()) continue;
      acc = acc + tab.nij(i, j) * (c[i] * c[j]);
    }
  }
  return acc;
}

Endomorphism make_endomorphism(CurveRef curve, const RatFun& t1, const RatFun& n1,
                               std::vector<Int> min_poly) {
  if (!t1.field()->same(*curve->field()))
    throw Error(ErrorKind::MixedFields, "correspondence data over a different field");
  if (min_poly.size() < 2 || min_poly.back() != 1)
    throw Error(ErrorKind::BadParameter, "minimal polynomial must be monic of degree >= 1");
  Endomorphism eta;
  eta.curve = std::move(curve);
  eta.tables = rational_maps(t1, n1, eta.curve->genus());
  eta.min_poly = std::move(min_poly);
  return eta;
}

namespace {

struct SplittingContext {
  FieldRef ext;
  FieldEmbedding emb;
  CurveRef curve_ext;
};

// Push every support point of P through the correspondence over ctx.ext.
// nullopt when a(u) does not split completely there or some root's
// quadratic has a non-square discriminant (caller then grows the field).
std::optional<std::vector<Divisor>> push_points(const Endomorphism& eta,
                                                const Divisor& P,
                                                const SplittingContext& ctx) {
  const FieldRef& L = ctx.ext;
  Poly a_up = ctx.emb.map(P.a());
  Poly b_up = ctx.emb.map(P.b());
  const RatFun& t1 = eta.t1();
  const RatFun& n1 = eta.n1();
  const Poly& e2 = eta.tables.e2_den;
  Poly T1 = ctx.emb.map(Poly::div_exact(t1.num() * e2, t1.den()));
  Poly N1 = ctx.emb.map(Poly::div_exact(n1.num() * e2, n1.den()));
  Poly E2 = ctx.emb.map(e2);

  Rng rng(0x9019);
  auto roots = poly_roots(a_up, rng);
  int total = 0;
  for (auto& [r, m] : roots) total += m;
  if (total != P.a().degree()) return std::nullopt;

  std::vector<Divisor> images;
  for (auto& [u_i, mult] : roots) {
    Fq v_i = b_up.eval(u_i);
    Fq A = E2.eval(u_i);
    if (A.is_zero())
      throw Error(ErrorKind::DegenerateSupport,
                  "support point at a pole of the correspondence");
    Fq Tc = T1.eval(u_i);
    Fq Nc = N1.eval(u_i);
    Fq disc = Tc * Tc - Fq::from_int(L, 4) * A * Nc;
    auto s = disc.sqrt();
    if (!s) return std::nullopt;
    Fq inv2A = (Fq::from_int(L, 2) * A).inverse();
    Fq r1 = (Tc + *s) * inv2A;
    Fq r2 = (Tc - *s) * inv2A;
    if (Fq::lex_less(r2, r1)) std::swap(r1, r2);
    for (int c = 0; c < mult; ++c) {
      images.push_back(point_divisor(ctx.curve_ext, r1, v_i));
      images.push_back(point_divisor(ctx.curve_ext, r2, v_i));
    }
  }
  return images;
}

}  // namespace

Divisor endo_evaluate_pointwise(const Endomorphism& eta, const Divisor& P,
                                int max_ext_degree) {
  if (!P.curve()->same(*eta.curve))
    throw Error(ErrorKind::MixedCurves, "divisor not on the endomorphism's curve");
  if (P.is_identity()) return P;
  if (max_ext_degree < 1)
    throw Error(ErrorKind::BadParameter, "extension budget must be >= 1");

  const FieldRef& base = eta.curve->field();
  for (int e = 1; e <= max_ext_degree; ++e) {
    int abs_deg = base->k() * e;
    if (abs_deg > 64)
      throw Error(ErrorKind::ExtensionTooLarge,
                  "splitting field degree " + std::to_string(abs_deg) +
                      " over the prime field exceeds the supported maximum");
    FieldRef L = e == 1 ? base : FieldDesc::extension_of_degree(base->p(), abs_deg);
    SplittingContext ctx{L, FieldEmbedding(base, L), CurveRef()};
    ctx.curve_ext = e == 1 ? eta.curve : Curve::make(L, ctx.emb.map(eta.curve->f()));
    auto images = push_points(eta, P, ctx);
    if (!images) continue;
    Divisor acc = Divisor::identity(ctx.curve_ext);
    for (const Divisor& img : *images) acc = jac_add(acc, img);
    if (e == 1) return acc;
    Poly a_down = ctx.emb.preimage(acc.a());
    Poly b_down = ctx.emb.preimage(acc.b());
    return Divisor(eta.curve, std::move(a_down), std::move(b_down));
  }
  throw Error(ErrorKind::ExtensionTooLarge,
              "no splitting field within degree " + std::to_string(max_ext_degree));
}

Divisor endo_evaluate(const Endomorphism& eta, const Divisor& P, EndoEvalStats* stats) {
  if (!P.curve()->same(*eta.curve))
    throw Error(ErrorKind::MixedCurves, "divisor not on the endomorphism's curve");
  EndoEvalStats local;
  EndoEvalStats& st = stats ? *stats : local;
  st = EndoEvalStats{};
  if (P.is_identity()) return P;

  const Poly& f = eta.curve->f();

  RatFun aprime = apply_N(eta.tables, P.a());
  RatFun dtrace = apply_T(eta.tables, P.b());

  if (!dtrace.is_zero()) {
    Poly E = Poly::lcm(aprime.den(), dtrace.den());
    Poly G = Poly::gcd(aprime.num(), dtrace.num());
    st.gcd_was_one = G.is_one();
    Poly ap = Poly::div_exact(Poly::div_exact(E, aprime.den()) * aprime.num(), G);
    Poly dp = Poly::div_exact(Poly::div_exact(E, dtrace.den()) * dtrace.num(), G);
    auto [g1, inv, t_unused] = Poly::xgcd(dp, ap);
    if (g1.is_one()) {
      RatFun w = (RatFun(f) + apply_N(eta.tables, P.b())) * RatFun(E, G);
      if (w.is_poly()) {
        Poly bprime = (inv * w.num()).mod(ap);
        try {
          Reduction red = cantor_reduce(eta.curve, ap, bprime);
          st.reduce_iterations = red.iterations;
          return red.divisor;
        } catch (const Error& err) {
          if (err.kind() != ErrorKind::InvalidDivisor) throw;
        }
      }
    }
  }
  st.fallback_used = true;
  return endo_evaluate_pointwise(eta, P, 2 * eta.curve->genus());
}

Divisor endo_min_poly_apply(const Endomorphism& eta, const Divisor& P) {
  Divisor acc = Divisor::identity(eta.curve);
  Divisor power = P;
  for (std::size_t i = 0; i < eta.min_poly.size(); ++i) {
    if (i > 0) power = endo_evaluate(eta, power);
    if (eta.min_poly[i] != 0)
      acc = jac_add(acc, jac_scalar_mul(power, eta.min_poly[i]));
  }
  return acc;
}

}  // namespace rmjac
