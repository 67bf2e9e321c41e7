#ifndef RMJAC_POLY_HPP
#define RMJAC_POLY_HPP

#include "rmjac/field.hpp"

#include <initializer_list>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace rmjac {

// Univariate polynomial over a FieldDesc, little-endian coefficients,
// canonical form (no trailing zeros; the zero polynomial stores nothing).
// The zero polynomial has no degree: callers must branch on is_zero()
// before asking for one.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Fq& c);

  static Poly zero(const FieldRef& d);
  static Poly one(const FieldRef& d);
  static Poly x(const FieldRef& d);
  static Poly from_coeffs(const FieldRef& d, std::vector<Fq> coeffs);
  // Residue embedding of small-integer coefficients, little-endian.
  static Poly from_ints(const FieldRef& d, const std::vector<Int>& coeffs);

  const FieldRef& field() const { return desc_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  int degree() const;  // requires !is_zero()
  const Fq& lc() const;
  Fq coeff(int i) const;  // zero beyond the stored range
  const std::vector<Fq>& coeffs() const { return c_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Fq& s) const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // a = q*b + r with deg r < deg b; DivisionByZero when b == 0.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  Poly mod(const Poly& b) const { return divmod(*this, b).second; }
  // Exact quotient; Internal error when the division leaves a remainder.
  static Poly div_exact(const Poly& a, const Poly& b);

  // (g, s, t) with g = s*a + t*b, g the monic gcd. xgcd(0, 0) = (0, 0, 0).
  static std::tuple<Poly, Poly, Poly> xgcd(const Poly& a, const Poly& b);
  static Poly gcd(const Poly& a, const Poly& b);
  static Poly lcm(const Poly& a, const Poly& b);

  Fq eval(const Fq& x) const;
  Poly derivative() const;
  Poly monic() const;
  // a(b(u))
  static Poly compose(const Poly& a, const Poly& b);
  Poly pow(unsigned e) const;
  // this * u^n
  Poly shift(int n) const;

  std::string str() const;

  void check_same(const Poly& o) const;

 private:
  Poly(FieldRef d, std::vector<Fq> c) : desc_(std::move(d)), c_(std::move(c)) {}
  void trim();

  FieldRef desc_;
  std::vector<Fq> c_;
};

// Reduced fraction num/den over a FieldDesc: den monic, gcd(num, den) = 1.
class RatFun {
 public:
  RatFun() = default;
  explicit RatFun(Poly num);
  RatFun(Poly num, Poly den);  // reduces; DivisionByZero when den == 0

  static RatFun zero(const FieldRef& d);
  static RatFun one(const FieldRef& d);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const FieldRef& field() const { return num_.field(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_.is_one(); }

  RatFun operator+(const RatFun& o) const;
  RatFun operator-(const RatFun& o) const;
  RatFun operator*(const RatFun& o) const;
  RatFun operator*(const Fq& s) const;
  RatFun operator-() const;

  bool operator==(const RatFun& o) const;
  bool operator!=(const RatFun& o) const { return !(*this == o); }

  std::string str() const;

 private:
  Poly num_, den_;
  void normalize();
};

// Roots in the coefficient field with multiplicities, sorted by Fq::lex_less.
// Cantor-Zassenhaus splitting driven by the supplied rng.
std::vector<std::pair<Fq, int>> poly_roots(const Poly& f, Rng& rng);

}  // namespace rmjac

#endif
