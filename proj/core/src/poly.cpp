#include "rmjac/poly.hpp"

#include <algorithm>
#include <cassert>

namespace rmjac {

Poly::Poly(const Fq& c) : desc_(c.field()) {
  if (!c.is_zero()) c_.push_back(c);
}

Poly Poly::zero(const FieldRef& d) { return Poly(d, {}); }

Poly Poly::one(const FieldRef& d) { return Poly(d, {Fq::one(d)}); }

Poly Poly::x(const FieldRef& d) { return Poly(d, {Fq::zero(d), Fq::one(d)}); }

Poly Poly::from_coeffs(const FieldRef& d, std::vector<Fq> coeffs) {
  for (const Fq& c : coeffs)
    if (!c.field()->same(*d))
      throw Error(ErrorKind::MixedFields, "coefficient from another field");
  Poly out(d, std::move(coeffs));
  out.trim();
  return out;
}

Poly Poly::from_ints(const FieldRef& d, const std::vector<Int>& coeffs) {
  std::vector<Fq> c;
  c.reserve(coeffs.size());
  for (const Int& v : coeffs) c.push_back(Fq::from_int(d, v));
  return from_coeffs(d, std::move(c));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int Poly::degree() const {
  if (is_zero())
    throw Error(ErrorKind::Internal, "degree of the zero polynomial");
  return (int)c_.size() - 1;
}

const Fq& Poly::lc() const {
  if (is_zero()) throw Error(ErrorKind::Internal, "lc of the zero polynomial");
  return c_.back();
}

Fq Poly::coeff(int i) const {
  if (i < 0 || i >= (int)c_.size()) return Fq::zero(desc_);
  return c_[i];
}

void Poly::check_same(const Poly& o) const {
  if (!desc_ || !o.desc_ || !desc_->same(*o.desc_))
    throw Error(ErrorKind::MixedFields, "polynomials over different fields");
}

Poly Poly::operator+(const Poly& o) const {
  check_same(o);
  std::vector<Fq> c(std::max(c_.size(), o.c_.size()), Fq::zero(desc_));
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < c_.size() && i < o.c_.size()) c[i] = c_[i] + o.c_[i];
    else if (i < c_.size()) c[i] = c_[i];
    else c[i] = o.c_[i];
  }
  Poly out(desc_, std::move(c));
  out.trim();
  return out;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  std::vector<Fq> c(c_.size(), Fq::zero(desc_));
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
  return Poly(desc_, std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
  check_same(o);
  if (is_zero() || o.is_zero()) return zero(desc_);
  std::vector<Fq> c(c_.size() + o.c_.size() - 1, Fq::zero(desc_));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      c[i + j] += c_[i] * o.c_[j];
  }
  return Poly(desc_, std::move(c));
}

Poly Poly::operator*(const Fq& s) const {
  if (s.is_zero()) return zero(desc_);
  std::vector<Fq> c(c_.size(), Fq::zero(desc_));
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * s;
  Poly out(desc_, std::move(c));
  out.trim();
  return out;
}

bool Poly::operator==(const Poly& o) const {
  if (!desc_ || !o.desc_) return c_.empty() && o.c_.empty();
  return desc_->same(*o.desc_) && c_ == o.c_;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  a.check_same(b);
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero polynomial");
  if (a.is_zero() || a.c_.size() < b.c_.size()) return {zero(a.desc_), a};
  std::vector<Fq> rem = a.c_;
  std::size_t db = b.c_.size() - 1;
  std::vector<Fq> q(rem.size() - db, Fq::zero(a.desc_));
  Fq inv_lc = b.lc().inverse();
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i].is_zero()) continue;
    Fq qc = rem[i] * inv_lc;
    q[i - db] = qc;
    for (std::size_t j = 0; j <= db; ++j)
      rem[i - db + j] -= qc * b.c_[j];
  }
  Poly qq(a.desc_, std::move(q));
  Poly rr(a.desc_, std::move(rem));
  qq.trim();
  rr.trim();
  return {std::move(qq), std::move(rr)};
}

Poly Poly::div_exact(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero())
    throw Error(ErrorKind::Internal, "expected exact polynomial division");
  return q;
}

std::tuple<Poly, Poly, Poly> Poly::xgcd(const Poly& a, const Poly& b) {
  a.check_same(b);
  const FieldRef& d = a.desc_;
  if (a.is_zero() && b.is_zero()) return {zero(d), zero(d), zero(d)};
  if (b.is_zero()) {
    Fq inv_lc = a.lc().inverse();
    return {a * inv_lc, Poly(inv_lc), zero(d)};
  }
  Poly r0 = a, r1 = b;
  Poly s0 = one(d), s1 = zero(d);
  while (!r1.is_zero()) {
    auto [q, r2] = divmod(r0, r1);
    Poly s2 = s0 - q * s1;
    r0 = std::move(r1); r1 = std::move(r2);
    s0 = std::move(s1); s1 = std::move(s2);
  }
  Fq inv_lc = r0.lc().inverse();
  Poly g = r0 * inv_lc;
  Poly s = s0 * inv_lc;
  // t = (g - s*a)/b exactly
  Poly t = div_exact(g - s * a, b);
  return {std::move(g), std::move(s), std::move(t)};
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
  a.check_same(b);
  Poly r0 = a, r1 = b;
  while (!r1.is_zero()) {
    Poly r2 = divmod(r0, r1).second;
    r0 = std::move(r1);
    r1 = std::move(r2);
  }
  if (r0.is_zero()) return r0;
  return r0.monic();
}

Poly Poly::lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return zero(a.desc_);
  Poly g = gcd(a, b);
  return div_exact(a * b, g).monic();
}

Fq Poly::eval(const Fq& x) const {
  Fq acc = Fq::zero(desc_ ? desc_ : x.field());
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return zero(desc_);
  std::vector<Fq> c(c_.size() - 1, Fq::zero(desc_));
  for (std::size_t i = 1; i < c_.size(); ++i)
    c[i - 1] = c_[i] * Fq::from_int(desc_, Int(i));
  Poly out(desc_, std::move(c));
  out.trim();
  return out;
}

Poly Poly::monic() const {
  if (is_zero()) throw Error(ErrorKind::Internal, "monic of the zero polynomial");
  if (lc().is_one()) return *this;
  return *this * lc().inverse();
}

Poly Poly::compose(const Poly& a, const Poly& b) {
  a.check_same(b);
  Poly acc = zero(a.desc_);
  for (std::size_t i = a.c_.size(); i-- > 0;) acc = acc * b + Poly(a.c_[i]);
  return acc;
}

Poly Poly::pow(unsigned e) const {
  Poly r = one(desc_);
  Poly base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

Poly Poly::shift(int n) const {
  if (is_zero() || n == 0) return *this;
  if (n < 0) throw Error(ErrorKind::Internal, "negative shift");
  std::vector<Fq> c((std::size_t)n, Fq::zero(desc_));
  c.insert(c.end(), c_.begin(), c_.end());
  return Poly(desc_, std::move(c));
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += c_[i].str();
    if (i == 1) s += "*u";
    else if (i > 1) s += "*u^" + std::to_string(i);
  }
  return s;
}

// ---- RatFun ----

RatFun::RatFun(Poly num) : num_(std::move(num)), den_(Poly::one(num_.field())) {}

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  num_.check_same(den_);
  if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  normalize();
}

RatFun RatFun::zero(const FieldRef& d) { return RatFun(Poly::zero(d)); }
RatFun RatFun::one(const FieldRef& d) { return RatFun(Poly::one(d)); }

void RatFun::normalize() {
  if (num_.is_zero()) {
    den_ = Poly::one(num_.field());
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (!g.is_one()) {
    num_ = Poly::div_exact(num_, g);
    den_ = Poly::div_exact(den_, g);
  }
  Fq inv_lc = den_.lc().inverse();
  if (!inv_lc.is_one()) {
    num_ = num_ * inv_lc;
    den_ = den_ * inv_lc;
  }
}

RatFun RatFun::operator+(const RatFun& o) const {
  return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-(const RatFun& o) const {
  return RatFun(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator*(const RatFun& o) const {
  return RatFun(num_ * o.num_, den_ * o.den_);
}

RatFun RatFun::operator*(const Fq& s) const {
  return RatFun(num_ * s, den_);
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

bool RatFun::operator==(const RatFun& o) const {
  return num_ == o.num_ && den_ == o.den_;
}

std::string RatFun::str() const {
  if (is_poly()) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

// ---- root finding ----

namespace {

// x^e mod f for big e, e >= 0.
Poly powmod_poly(const Poly& base, const Int& e, const Poly& f) {
  Poly r = Poly::one(f.field());
  if (e == 0) return r;
  Poly b = base.mod(f);
  unsigned nbits = bitlen(e);
  for (unsigned i = nbits; i-- > 0;) {
    r = (r * r).mod(f);
    if (boost::multiprecision::bit_test(e, i)) r = (r * b).mod(f);
  }
  return r;
}

// Split a product of distinct monic linear factors into roots.
void split_linear(const Poly& f, Rng& rng, std::vector<Fq>& out) {
  const FieldRef& d = f.field();
  if (f.degree() == 0) return;
  if (f.degree() == 1) {
    out.push_back(-f.coeff(0) * f.coeff(1).inverse());
    return;
  }
  const Int& q = d->q();
  for (;;) {
    Poly shift = Poly::from_coeffs(d, {Fq::random(d, rng), Fq::one(d)});
    Poly w = powmod_poly(shift, (q - 1) / 2, f) - Poly::one(d);
    Poly g = Poly::gcd(w, f);
    if (!g.is_zero() && !g.is_one() && g.degree() < f.degree()) {
      split_linear(g, rng, out);
      split_linear(Poly::div_exact(f, g), rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<Fq, int>> poly_roots(const Poly& f, Rng& rng) {
  std::vector<std::pair<Fq, int>> result;
  if (f.is_zero() || f.degree() == 0) return result;
  const FieldRef& d = f.field();
  // isolate the part that splits into linear factors over F_q
  Poly xq_minus_x = powmod_poly(Poly::x(d), d->q(), f) - Poly::x(d);
  Poly lin = Poly::gcd(xq_minus_x, f);
  if (lin.is_zero()) lin = f.monic();  // f divides x^q - x
  if (lin.is_one()) return result;
  // squarefree part of lin is lin itself (x^q - x is squarefree)
  std::vector<Fq> roots;
  split_linear(lin, rng, roots);
  Poly rest = f;
  for (const Fq& r : roots) {
    Poly factor = Poly::from_coeffs(d, {-r, Fq::one(d)});
    int mult = 0;
    for (;;) {
      auto [q2, rem] = Poly::divmod(rest, factor);
      if (!rem.is_zero()) break;
      rest = q2;
      ++mult;
    }
    result.emplace_back(r, mult);
  }
  std::sort(result.begin(), result.end(),
            [](const auto& a, const auto& b) { return Fq::lex_less(a.first, b.first); });
  return result;
}

}  // namespace rmjac
