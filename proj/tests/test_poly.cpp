#include "helpers.hpp"

#include <doctest.h>

using namespace rmjac;
using namespace rmjac::testing;

TEST_CASE("divmod basics") {
  auto d = f7();
  Poly x = Poly::x(d);
  auto [q1, r1] = Poly::divmod(x.pow(3), x);
  CHECK(q1 == x.pow(2));
  CHECK(r1.is_zero());

  Poly a = mp(d, {1, 0, 1});  // u^2 + 1
  auto [q2, r2] = Poly::divmod(a, a);
  CHECK(q2 == Poly::one(d));
  CHECK(r2.is_zero());

  Poly num = mp(d, {1, 3, 0, 0, 1});  // u^4 + 3u + 1
  Poly den = mp(d, {0, 1, 1});        // u^2 + u
  auto [q3, r3] = Poly::divmod(num, den);
  CHECK(!r3.is_zero());
  CHECK(r3.degree() <= 1);
  CHECK(q3 * den + r3 == num);

  CHECK_THROWS_AS((void)Poly::divmod(num, Poly::zero(d)), Error);
}

TEST_CASE("divmod round-trip on random pairs") {
  auto d = f1009();
  Rng rng(42);
  for (int i = 0; i < 1000; ++i) {
    std::vector<Fq> ac, bc;
    int da = (int)rng.below(8), db = (int)rng.below(5);
    for (int j = 0; j <= da; ++j) ac.push_back(Fq::random(d, rng));
    for (int j = 0; j <= db; ++j) bc.push_back(Fq::random(d, rng));
    Poly a = Poly::from_coeffs(d, ac), b = Poly::from_coeffs(d, bc);
    if (b.is_zero()) continue;
    auto [q, r] = Poly::divmod(a, b);
    CHECK(q * b + r == a);
    if (!r.is_zero()) CHECK(r.degree() < b.degree());
  }
}

TEST_CASE("xgcd identities") {
  auto d = f5();
  Poly a = mp(d, {2, 0, 3});
  auto [g0, s0, t0] = Poly::xgcd(a, Poly::zero(d));
  CHECK(g0 == a.monic());
  CHECK(s0 * a == g0);
  CHECK(t0.is_zero());

  // xgcd(u^2 - 1, u - 1) = (u - 1, 0, 1)
  auto [g1, s1, t1] = Poly::xgcd(mp(d, {-1, 0, 1}), mp(d, {-1, 1}));
  CHECK(g1 == mp(d, {-1, 1}));
  CHECK(s1.is_zero());
  CHECK(t1 == Poly::one(d));

  auto dd = f1009();
  Rng rng(99);
  int coprime_seen = 0;
  for (int i = 0; i < 300; ++i) {
    std::vector<Fq> ac, bc;
    for (int j = 0; j <= (int)rng.below(6); ++j) ac.push_back(Fq::random(dd, rng));
    for (int j = 0; j <= (int)rng.below(6); ++j) bc.push_back(Fq::random(dd, rng));
    Poly a2 = Poly::from_coeffs(dd, ac), b2 = Poly::from_coeffs(dd, bc);
    if (a2.is_zero() && b2.is_zero()) continue;
    auto [g, s, t] = Poly::xgcd(a2, b2);
    CHECK(s * a2 + t * b2 == g);
    CHECK(Poly::divmod(a2, g).second.is_zero());
    CHECK(Poly::divmod(b2, g).second.is_zero());
    if (g.is_one()) ++coprime_seen;
  }
  CHECK(coprime_seen > 200);  // random pairs are mostly coprime
}

TEST_CASE("evaluation") {
  auto d = f5();
  CHECK(Poly::zero(d).eval(fe(d, 3)) == Fq::zero(d));
  // u(u^2-1)^2 + t at u = 0 is t
  Poly x = Poly::x(d);
  Poly f = x * (x.pow(2) - Poly::one(d)).pow(2) + Poly(fe(d, 2));
  CHECK(f.eval(Fq::zero(d)) == fe(d, 2));
  // u^5 - 5u^3 + 5u + 1 at 2 over F_5: the char-5 terms vanish
  Poly g = mp(d, {1, 5, 0, -5, 0, 1});
  CHECK(g.eval(fe(d, 2)) == fe(d, 3));
}

TEST_CASE("rational function arithmetic stays reduced") {
  auto d = f1009();
  Poly x = Poly::x(d);
  RatFun u_inv(Poly::one(d), x);
  CHECK(u_inv * RatFun(x) == RatFun::one(d));
  RatFun r(mp(d, {1, 2}), mp(d, {0, 0, 1}));
  CHECK(r + RatFun::zero(d) == r);
  CHECK((r - r).is_zero());

  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    std::vector<Fq> nc, dc;
    for (int j = 0; j <= (int)rng.below(4); ++j) nc.push_back(Fq::random(d, rng));
    for (int j = 0; j <= (int)rng.below(4); ++j) dc.push_back(Fq::random(d, rng));
    Poly num = Poly::from_coeffs(d, nc), den = Poly::from_coeffs(d, dc);
    if (den.is_zero()) continue;
    RatFun a(num, den);
    RatFun b(den, mp(d, {3, 1}));
    for (const RatFun& v : {a + b, a * b, a - b}) {
      CHECK(v.den().lc().is_one());
      if (!v.num().is_zero()) CHECK(Poly::gcd(v.num(), v.den()).is_one());
      else CHECK(v.den().is_one());
    }
  }
}

TEST_CASE("compose and pow") {
  auto d = f1009();
  Poly x = Poly::x(d);
  Poly a = mp(d, {1, 2, 3});
  CHECK(Poly::compose(a, x) == a);
  Poly b = mp(d, {0, 0, 1});
  // a(u^2) has only even-degree terms
  Poly c = Poly::compose(a, b);
  CHECK(c.degree() == 4);
  CHECK(c.coeff(2) == fe(d, 2));
}

TEST_CASE("root finding with multiplicities") {
  auto d = f1009();
  Poly x = Poly::x(d);
  Poly f = (x - Poly(fe(d, 3))).pow(2) * (x - Poly(fe(d, 10))) * (x.pow(2) + Poly::one(d));
  Rng rng(17);
  auto roots = poly_roots(f, rng);
  // x^2 + 1 contributes roots only if -1 is a QR mod 1009 (1009 = 1 mod 4)
  bool minus_one_square = fe(d, 1008).is_square();
  CHECK(minus_one_square);
  CHECK(roots.size() == 4);
  int found3 = 0, found10 = 0;
  for (auto& [r, m] : roots) {
    if (r == fe(d, 3)) {
      found3 = m;
    } else if (r == fe(d, 10)) {
      found10 = m;
    } else {
      CHECK(r * r == -Fq::one(d));
    }
  }
  CHECK(found3 == 2);
  CHECK(found10 == 1);
}
