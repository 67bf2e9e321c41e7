#include "helpers.hpp"

#include <doctest.h>

using namespace rmjac;
using namespace rmjac::testing;

namespace {

// independent word-sized powmod for cross-checks
std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  unsigned __int128 r = 1, base = b % m;
  while (e) {
    if (e & 1) r = r * base % m;
    base = base * base % m;
    e >>= 1;
  }
  return (std::uint64_t)r;
}

}  // namespace

TEST_CASE("prime field basics") {
  auto d = f5();
  CHECK(fe(d, 3) + fe(d, 4) == fe(d, 2));
  CHECK(fe(d, 2).inverse() == fe(d, 3));
  CHECK(fe(f7(), 3).inverse() == fe(f7(), 5));
  CHECK(fe(f1009(), 500) * fe(f1009(), 500) == fe(f1009(), 777));
}

TEST_CASE("extension field multiplication wraps through the modulus") {
  auto d = f5_37();
  Fq xi = Fq::generator(d);
  Fq x36 = xi.pow(36);
  // xi^37 = -(4 xi^2 + 3 xi + 3) = xi^2 + 2 xi + 2
  Fq expected = Fq::from_coeffs(d, {2, 2, 1});
  CHECK(x36 * xi == expected);
  CHECK(xi.pow(37) == expected);
}

TEST_CASE("inverse in the big extension") {
  auto d = f5_37();
  Fq xi = Fq::generator(d);
  CHECK(xi.inverse() * xi == Fq::one(d));
  Rng rng(11);
  for (int i = 0; i < 20; ++i) {
    Fq x = Fq::random(d, rng);
    if (x.is_zero()) continue;
    CHECK(x.inverse() * x == Fq::one(d));
  }
  CHECK_THROWS_AS((void)Fq::zero(d).inverse(), Error);
}

TEST_CASE("pow conventions and Fermat") {
  auto d = f1009();
  CHECK(Fq::zero(d).pow(0) == Fq::one(d));
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    Fq x = Fq::random(d, rng);
    CHECK(x.pow(d->q()) == x);
    if (!x.is_zero()) CHECK(x.pow(d->q() - 1) == Fq::one(d));
  }
  // Euler criterion oracle: 3^504 mod 1009 via independent powmod
  std::uint64_t legendre = powmod_u64(3, 504, 1009);
  CHECK((legendre == 1 || legendre == 1008));
  CHECK(fe(d, 3).pow(504) == fe(d, (long long)legendre));
}

TEST_CASE("square roots") {
  CHECK(Fq::zero(f5()).sqrt().value() == Fq::zero(f5()));
  CHECK(fe(f5(), 4).sqrt().value() == fe(f5(), 2));  // 2 before 3 lexicographically
  CHECK(!fe(f5(), 2).sqrt().has_value());

  auto d = f5_37();
  Fq t = t_5_37();
  auto y = t.sqrt();
  REQUIRE(y.has_value());
  CHECK(*y * *y == t);

  Rng rng(3);
  for (int i = 0; i < 25; ++i) {
    Fq x = Fq::random(d, rng);
    Fq sq = x * x;
    auto r = sq.sqrt();
    REQUIRE(r.has_value());
    CHECK(*r * *r == sq);
  }
}

TEST_CASE("field axioms on random samples") {
  for (auto d : {f5(), f1009(), f5_37()}) {
    Rng rng(1234);
    int trials = d->k() > 1 ? 60 : 1000;
    for (int i = 0; i < trials; ++i) {
      Fq x = Fq::random(d, rng), y = Fq::random(d, rng), z = Fq::random(d, rng);
      CHECK(x + y == y + x);
      CHECK(x * y == y * x);
      CHECK((x + y) + z == x + (y + z));
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x - x == Fq::zero(d));
    }
  }
}

TEST_CASE("descriptor validation") {
  CHECK_THROWS_AS((void)FieldDesc::prime_field(2), Error);
  CHECK_THROWS_AS((void)FieldDesc::prime_field(91), Error);  // 7 * 13
  // x^2 - 1 splits over F_5
  CHECK_THROWS_AS((void)FieldDesc::extension(5, {4, 0, 1}), Error);
  // x^2 + 1 is irreducible over F_7 (7 = 3 mod 4)
  auto d = FieldDesc::extension(7, {1, 0, 1});
  CHECK(d->q() == 49);
  Fq i = Fq::generator(d);
  CHECK(i * i == -Fq::one(d));
}

TEST_CASE("mixed field operands rejected") {
  CHECK_THROWS_AS((void)(fe(f5(), 1) + fe(f7(), 1)), Error);
  // structurally equal descriptors interoperate
  auto d1 = FieldDesc::prime_field(5);
  auto d2 = FieldDesc::prime_field(5);
  CHECK(Fq::from_int(d1, 2) + Fq::from_int(d2, 4) == Fq::from_int(d1, 1));
}

TEST_CASE("deterministic extension construction") {
  auto a = FieldDesc::extension_of_degree(5, 5);
  auto b = FieldDesc::extension_of_degree(5, 5);
  CHECK(a->modulus() == b->modulus());
  CHECK(a->q() == 3125);
}
