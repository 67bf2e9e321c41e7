#include "rmjac/field.hpp"

#include <algorithm>
#include <cassert>

namespace rmjac {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 fp_add(u64 a, u64 b, u64 p) {
  u64 s = a + b;  // p < 2^62, no overflow
  return s >= p ? s - p : s;
}
inline u64 fp_sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
inline u64 fp_neg(u64 a, u64 p) { return a == 0 ? 0 : p - a; }
inline u64 fp_mul(u64 a, u64 b, u64 p) { return (u64)((u128)a * b % p); }

u64 fp_inv(u64 a, u64 p) {
  if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  std::int64_t t0 = 0, t1 = 1;
  u64 r0 = p, r1 = a;
  while (r1 != 0) {
    u64 q = r0 / r1;
    u64 r2 = r0 - q * r1;
    std::int64_t t2 = t0 - (std::int64_t)q * t1;
    r0 = r1; r1 = r2;
    t0 = t1; t1 = t2;
  }
  assert(r0 == 1);
  return t0 < 0 ? (u64)(t0 + (std::int64_t)p) : (u64)t0;
}

// --- dense F_p[x] helpers on raw little-endian coefficient vectors ---
// Used for modulus validation and inversion in F_{p^k}; the public Poly
// type lives a layer above and cannot be used here.

using FpPoly = std::vector<u64>;

void fppoly_trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly fppoly_mul(const FpPoly& a, const FpPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  FpPoly out(a.size() + b.size() - 1, 0);
  const u128 lim = (u128)1 << 126;
  for (std::size_t c = 0; c < out.size(); ++c) {
    u128 acc = 0;
    std::size_t lo = c >= b.size() - 1 ? c - (b.size() - 1) : 0;
    std::size_t hi = std::min(c, a.size() - 1);
    for (std::size_t i = lo; i <= hi; ++i) {
      acc += (u128)a[i] * b[c - i];
      if (acc >= lim) acc %= p;
    }
    out[c] = (u64)(acc % p);
  }
  return out;
}

// Reduce a in place modulo monic m.
void fppoly_mod(FpPoly& a, const FpPoly& m, u64 p) {
  fppoly_trim(a);
  std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    u64 c = a.back();
    std::size_t shift = a.size() - 1 - dm;
    if (c != 0) {
      for (std::size_t j = 0; j < dm; ++j)
        a[shift + j] = fp_sub(a[shift + j], fp_mul(c, m[j], p), p);
    }
    a.pop_back();
    fppoly_trim(a);
  }
}

// rem := rem mod b (in place); returns the quotient. b nonzero.
FpPoly fppoly_divmod(FpPoly& rem, const FpPoly& b, u64 p) {
  fppoly_trim(rem);
  std::size_t db = b.size() - 1;
  if (rem.size() <= db) return {};
  FpPoly q(rem.size() - db, 0);
  u64 inv_lc = fp_inv(b.back(), p);
  for (std::size_t i = rem.size(); i-- > db;) {
    u64 cf = rem[i];
    if (cf != 0) {
      u64 qc = fp_mul(cf, inv_lc, p);
      q[i - db] = qc;
      for (std::size_t j = 0; j <= db; ++j)
        rem[i - db + j] = fp_sub(rem[i - db + j], fp_mul(qc, b[j], p), p);
    }
  }
  fppoly_trim(rem);
  return q;
}

FpPoly fppoly_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, u64 p) {
  FpPoly r = fppoly_mul(a, b, p);
  fppoly_mod(r, m, p);
  return r;
}

FpPoly fppoly_powmod(FpPoly t, u64 e, const FpPoly& m, u64 p) {
  FpPoly r{1};
  fppoly_mod(t, m, p);
  while (e > 0) {
    if (e & 1) r = fppoly_mulmod(r, t, m, p);
    t = fppoly_mulmod(t, t, m, p);
    e >>= 1;
  }
  return r;
}

FpPoly fppoly_gcd(FpPoly a, FpPoly b, u64 p) {
  fppoly_trim(a);
  fppoly_trim(b);
  while (!b.empty()) {
    fppoly_divmod(a, b, p);
    std::swap(a, b);
  }
  if (!a.empty()) {
    u64 inv_lc = fp_inv(a.back(), p);
    for (auto& c : a) c = fp_mul(c, inv_lc, p);
  }
  return a;
}

// s with s*a == 1 (mod m); requires gcd(a, m) == 1.
FpPoly fppoly_invmod(const FpPoly& a0, const FpPoly& m, u64 p) {
  FpPoly r0 = m, r1 = a0;
  fppoly_mod(r1, m, p);
  FpPoly s0{}, s1{1};
  while (!r1.empty()) {
    FpPoly rem = r0;
    FpPoly q = fppoly_divmod(rem, r1, p);
    FpPoly qs1 = fppoly_mul(q, s1, p);
    FpPoly s2(std::max(s0.size(), qs1.size()), 0);
    for (std::size_t i = 0; i < s2.size(); ++i) {
      u64 x = i < s0.size() ? s0[i] : 0;
      u64 y = i < qs1.size() ? qs1[i] : 0;
      s2[i] = fp_sub(x, y, p);
    }
    fppoly_trim(s2);
    r0 = std::move(r1); r1 = std::move(rem);
    s0 = std::move(s1); s1 = std::move(s2);
  }
  if (r0.size() != 1)
    throw Error(ErrorKind::DivisionByZero, "element not invertible");
  u64 inv_lc = fp_inv(r0[0], p);
  for (auto& c : s0) c = fp_mul(c, inv_lc, p);
  fppoly_mod(s0, m, p);
  return s0;
}

// x^(p^j) mod m by iterating the p-power map.
FpPoly fppoly_frobenius_iter(const FpPoly& m, u64 p, int j) {
  FpPoly t{0, 1};
  fppoly_mod(t, m, p);
  for (int i = 0; i < j; ++i) t = fppoly_powmod(t, p, m, p);
  return t;
}

bool gcd_with_frobenius_is_trivial(const FpPoly& m, u64 p, int j) {
  FpPoly t = fppoly_frobenius_iter(m, p, j);
  if (t.size() < 2) t.resize(2, 0);
  t[1] = fp_sub(t[1], 1, p);  // t - x
  fppoly_trim(t);
  FpPoly g = fppoly_gcd(t, m, p);
  return g.size() == 1;
}

bool fppoly_is_irreducible(const FpPoly& m, u64 p) {
  int k = (int)m.size() - 1;
  if (k < 1) return false;
  if (k == 1) return true;
  // x^(p^k) == x mod m, and gcd(x^(p^(k/d)) - x, m) == 1 for each prime d | k
  FpPoly xq = fppoly_frobenius_iter(m, p, k);
  FpPoly x{0, 1};
  fppoly_mod(x, m, p);
  if (xq != x) return false;
  int rem = k;
  for (int d = 2; d * d <= rem; ++d) {
    if (rem % d == 0) {
      if (!gcd_with_frobenius_is_trivial(m, p, k / d)) return false;
      while (rem % d == 0) rem /= d;
    }
  }
  if (rem > 1 && !gcd_with_frobenius_is_trivial(m, p, k / rem)) return false;
  return true;
}

}  // namespace

FieldDesc::FieldDesc(std::uint64_t p, std::vector<std::uint64_t> modulus)
    : p_(p), modulus_(std::move(modulus)) {
  if (p == 2) throw Error(ErrorKind::CharacteristicTwo, "p must be odd");
  if (p < 3 || p >= (std::uint64_t(1) << 62))
    throw Error(ErrorKind::BadParameter, "p out of range [3, 2^62)");
  if (!is_probable_prime(Int(p)))
    throw Error(ErrorKind::BadParameter, "p is not prime");
  if (modulus_.empty()) {
    k_ = 1;
  } else {
    if (modulus_.size() < 3)
      throw Error(ErrorKind::BadParameter, "extension modulus must have degree >= 2");
    for (u64 c : modulus_)
      if (c >= p) throw Error(ErrorKind::BadParameter, "modulus coefficient out of range");
    if (modulus_.back() != 1)
      throw Error(ErrorKind::NotMonic, "extension modulus must be monic");
    k_ = (int)modulus_.size() - 1;
    if (k_ > 64) throw Error(ErrorKind::BadParameter, "extension degree > 64");
    if (!fppoly_is_irreducible(modulus_, p))
      throw Error(ErrorKind::BadParameter, "extension modulus is reducible");
  }
  q_ = 1;
  for (int i = 0; i < k_; ++i) q_ *= p;
}

FieldRef FieldDesc::prime_field(std::uint64_t p) {
  return FieldRef(new FieldDesc(p, {}));
}

FieldRef FieldDesc::extension(std::uint64_t p, std::vector<std::uint64_t> modulus) {
  return FieldRef(new FieldDesc(p, std::move(modulus)));
}

FieldRef FieldDesc::extension_of_degree(std::uint64_t p, int k) {
  if (k == 1) return prime_field(p);
  if (k < 1 || k > 64) throw Error(ErrorKind::BadParameter, "degree out of range");
  Rng rng(0x1f1e1dULL ^ (p * 1000003ULL + (u64)k));  // fixed seed: canonical modulus
  for (int tries = 0; tries < 60 * k; ++tries) {
    std::vector<u64> m(k + 1);
    for (int i = 0; i < k; ++i) m[i] = rng.below(p);
    m[k] = 1;
    if (fppoly_is_irreducible(m, p)) return extension(p, std::move(m));
  }
  throw Error(ErrorKind::Internal, "irreducible search exhausted");
}

// ---- Fq ----

Fq Fq::zero(const FieldRef& d) {
  return Fq(d, std::vector<u64>(d->k(), 0));
}

Fq Fq::one(const FieldRef& d) {
  std::vector<u64> c(d->k(), 0);
  c[0] = 1;
  return Fq(d, std::move(c));
}

Fq Fq::from_int(const FieldRef& d, const Int& v) {
  Int r = mod_floor(v, Int(d->p()));
  std::vector<u64> c(d->k(), 0);
  c[0] = (u64)r;
  return Fq(d, std::move(c));
}

Fq Fq::from_coeffs(const FieldRef& d, std::vector<std::uint64_t> coeffs) {
  if ((int)coeffs.size() > d->k())
    throw Error(ErrorKind::BadParameter, "coefficient sequence longer than degree");
  coeffs.resize(d->k(), 0);
  for (u64 c : coeffs)
    if (c >= d->p()) throw Error(ErrorKind::BadParameter, "coefficient out of range");
  return Fq(d, std::move(coeffs));
}

Fq Fq::generator(const FieldRef& d) {
  if (d->k() < 2) throw Error(ErrorKind::BadParameter, "prime field has no generator element");
  std::vector<u64> c(d->k(), 0);
  c[1] = 1;
  return Fq(d, std::move(c));
}

Fq Fq::random(const FieldRef& d, Rng& rng) {
  std::vector<u64> c(d->k());
  for (auto& x : c) x = rng.below(d->p());
  return Fq(d, std::move(c));
}

bool Fq::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](u64 x) { return x == 0; });
}

bool Fq::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](u64 x) { return x == 0; });
}

void Fq::check_same(const Fq& o) const {
  if (!desc_ || !o.desc_ || !desc_->same(*o.desc_))
    throw Error(ErrorKind::MixedFields, "operands from different fields");
}

Fq Fq::operator+(const Fq& o) const {
  check_same(o);
  std::vector<u64> c(c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = fp_add(c_[i], o.c_[i], desc_->p());
  return Fq(desc_, std::move(c));
}

Fq Fq::operator-(const Fq& o) const {
  check_same(o);
  std::vector<u64> c(c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = fp_sub(c_[i], o.c_[i], desc_->p());
  return Fq(desc_, std::move(c));
}

Fq Fq::operator-() const {
  std::vector<u64> c(c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = fp_neg(c_[i], desc_->p());
  return Fq(desc_, std::move(c));
}

Fq Fq::operator*(const Fq& o) const {
  check_same(o);
  const u64 p = desc_->p();
  if (desc_->k() == 1) return Fq(desc_, {fp_mul(c_[0], o.c_[0], p)});
  FpPoly prod = fppoly_mul(c_, o.c_, p);
  fppoly_mod(prod, desc_->modulus(), p);
  prod.resize(desc_->k(), 0);
  return Fq(desc_, std::move(prod));
}

Fq Fq::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  const u64 p = desc_->p();
  if (desc_->k() == 1) return Fq(desc_, {fp_inv(c_[0], p)});
  FpPoly s = fppoly_invmod(c_, desc_->modulus(), p);
  s.resize(desc_->k(), 0);
  return Fq(desc_, std::move(s));
}

Fq Fq::pow(const Int& e) const {
  if (e < 0) throw Error(ErrorKind::BadParameter, "negative exponent");
  Fq result = Fq::one(desc_);
  if (e == 0) return result;
  unsigned nbits = bitlen(e);
  for (unsigned i = nbits; i-- > 0;) {
    result = result * result;
    if (boost::multiprecision::bit_test(e, i)) result = result * *this;
  }
  return result;
}

bool Fq::is_square() const {
  if (is_zero()) return true;
  return pow((desc_->q() - 1) / 2).is_one();
}

std::optional<Fq> Fq::sqrt() const {
  if (is_zero()) return *this;
  const Int& q = desc_->q();
  if (!is_square()) return std::nullopt;
  Fq r = Fq::zero(desc_);
  if (q % 4 == 3) {
    r = pow((q + 1) / 4);
  } else {
    // Tonelli-Shanks; fixed-seed deterministic non-residue search
    Int s = q - 1;
    unsigned e = 0;
    while (s % 2 == 0) {
      s /= 2;
      ++e;
    }
    Rng rng(0x70e111);
    Fq z = Fq::zero(desc_);
    for (;;) {
      z = Fq::random(desc_, rng);
      if (!z.is_zero() && !z.is_square()) break;
    }
    Fq c = z.pow(s);
    Fq t = pow(s);
    r = pow((s + 1) / 2);
    unsigned m = e;
    while (!t.is_one()) {
      Fq tt = t;
      unsigned i = 0;
      while (!tt.is_one()) {
        tt = tt * tt;
        ++i;
      }
      Fq b = c;
      for (unsigned j = 0; j + i + 1 < m; ++j) b = b * b;
      m = i;
      c = b * b;
      t = t * c;
      r = r * b;
    }
  }
  Fq other = -r;
  return lex_less(other, r) ? other : r;
}

bool Fq::operator==(const Fq& o) const {
  if (!desc_ || !o.desc_) return desc_ == o.desc_;
  return desc_->same(*o.desc_) && c_ == o.c_;
}

bool Fq::lex_less(const Fq& a, const Fq& b) { return a.c_ < b.c_; }

std::string Fq::str() const {
  if (!desc_) return "<null>";
  if (desc_->k() == 1) return std::to_string(c_[0]);
  std::string s = "[";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c_[i]);
  }
  return s + "]";
}

}  // namespace rmjac
