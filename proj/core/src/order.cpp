#include "rmjac/order.hpp"

#include "rmjac/embed.hpp"

#include <algorithm>
#include <thread>

namespace rmjac {

Int LPolynomial::value_at_one() const {
  Int total = 0;
  for (const Int& c : coeffs) total += c;
  return total;
}

std::vector<Int> LPolynomial::power_sums(int e_max) const {
  // L(T) = prod (1 - alpha_i T); s_e = sum alpha_i^e. Newton:
  // s_k + c1 s_{k-1} + ... + c_{k-1} s_1 + k c_k = 0 (c_k = 0 beyond 2g).
  std::vector<Int> s(e_max + 1, Int(0));
  for (int k = 1; k <= e_max; ++k) {
    Int acc = k <= (int)coeffs.size() - 1 ? Int(k) * coeffs[k] : Int(0);
    for (int i = 1; i < k; ++i)
      if (i <= (int)coeffs.size() - 1) acc += coeffs[i] * s[k - i];
    s[k] = -acc;
  }
  return std::vector<Int>(s.begin() + 1, s.end());
}

Int LPolynomial::point_count(int e) const {
  Int qe = 1;
  for (int i = 0; i < e; ++i) qe *= q;
  return qe + 1 - power_sums(e)[e - 1];
}

namespace {

// Flat index <-> element digits for exhaustive enumeration.
std::vector<std::uint64_t> digits_of(Int idx, std::uint64_t p, int k) {
  std::vector<std::uint64_t> d(k, 0);
  for (int i = 0; i < k && idx != 0; ++i) {
    d[i] = (std::uint64_t)(idx % p);
    idx /= p;
  }
  return d;
}

bool odometer_next(std::vector<std::uint64_t>& d, std::uint64_t p) {
  for (auto& c : d) {
    if (++c < p) return true;
    c = 0;
  }
  return false;
}

// q^e <= 10^7 guarantees the flat index fits a word.
std::uint64_t flat_index(const std::vector<std::uint64_t>& d, std::uint64_t p) {
  std::uint64_t idx = 0;
  for (std::size_t i = d.size(); i-- > 0;) idx = idx * p + d[i];
  return idx;
}

}  // namespace

Int count_curve_points(const CurveRef& curve, int ext_degree) {
  if (ext_degree < 1) throw Error(ErrorKind::BadParameter, "extension degree must be >= 1");
  const FieldRef& base = curve->field();
  Int q_e = 1;
  for (int i = 0; i < ext_degree; ++i) q_e *= base->q();
  if (q_e > 10000000) throw Error(ErrorKind::TooLarge, "q^e exceeds the counting guard 10^7");

  const std::uint64_t p = base->p();
  const int K = base->k() * ext_degree;
  FieldRef L = ext_degree == 1 ? base : FieldDesc::extension_of_degree(p, K);
  Poly f = curve->f();
  if (ext_degree > 1) f = FieldEmbedding(base, L).map(f);

  const std::uint64_t n_elems = (std::uint64_t)q_e;

  // Square table indexed by flat element index.
  std::vector<std::uint8_t> is_sq(n_elems, 0);
  {
    std::vector<std::uint64_t> dgt(K, 0);
    do {
      Fq v = Fq::from_coeffs(L, dgt);
      Fq v2 = v * v;
      is_sq[flat_index(v2.coeffs(), p)] = 1;
    } while (odometer_next(dgt, p));
  }

  // Count affine points; u-range partitioned across workers.
  unsigned n_threads = std::thread::hardware_concurrency();
  if (n_threads == 0) n_threads = 1;
  n_threads = std::min<unsigned>(n_threads, 8);
  if (n_elems < 65536) n_threads = 1;

  auto count_range = [&](std::uint64_t begin, std::uint64_t end) -> std::uint64_t {
    std::uint64_t cnt = 0;
    std::vector<std::uint64_t> dgt = digits_of(Int(begin), p, K);
    for (std::uint64_t i = begin; i < end; ++i) {
      Fq u = Fq::from_coeffs(L, dgt);
      Fq fu = f.eval(u);
      if (fu.is_zero()) {
        cnt += 1;
      } else if (is_sq[flat_index(fu.coeffs(), p)]) {
        cnt += 2;
      }
      odometer_next(dgt, p);
    }
    return cnt;
  };

  Int total = 1;  // the point at infinity
  if (n_threads == 1) {
    total += count_range(0, n_elems);
  } else {
    std::vector<std::uint64_t> partial(n_threads, 0);
    std::vector<std::thread> workers;
    std::uint64_t chunk = n_elems / n_threads;
    for (unsigned t = 0; t < n_threads; ++t) {
      std::uint64_t begin = t * chunk;
      std::uint64_t end = t + 1 == n_threads ? n_elems : begin + chunk;
      workers.emplace_back([&, t, begin, end] { partial[t] = count_range(begin, end); });
    }
    for (auto& w : workers) w.join();
    for (std::uint64_t c : partial) total += c;
  }
  return total;
}

std::pair<Int, LPolynomial> jacobian_order(const CurveRef& curve) {
  const int g = curve->genus();
  const Int& q = curve->field()->q();

  std::vector<Int> s(g + 1, Int(0));  // power sums
  Int qe = 1;
  for (int e = 1; e <= g; ++e) {
    qe *= q;
    Int n_e = count_curve_points(curve, e);
    s[e] = qe + 1 - n_e;
  }

  LPolynomial L;
  L.q = q;
  L.genus = g;
  L.coeffs.assign(2 * g + 1, Int(0));
  L.coeffs[0] = 1;
  // Newton: k c_k = -(s_k + sum_{i=1}^{k-1} c_i s_{k-i})
  for (int k = 1; k <= g; ++k) {
    Int acc = s[k];
    for (int i = 1; i < k; ++i) acc += L.coeffs[i] * s[k - i];
    if (acc % k != 0)
      throw Error(ErrorKind::Internal, "Newton identity produced a non-integer");
    L.coeffs[k] = -acc / k;
  }
  // functional equation c_{2g-i} = q^{g-i} c_i
  for (int i = g - 1; i >= 0; --i) {
    Int qpow = 1;
    for (int j = 0; j < g - i; ++j) qpow *= q;
    L.coeffs[2 * g - i] = qpow * L.coeffs[i];
  }

  Int order = L.value_at_one();
  if (order <= 0) throw Error(ErrorKind::Internal, "non-positive group order");
  Int weil_bound = 2 * g * (boost::multiprecision::sqrt(q) + 1);
  if (boost::multiprecision::abs(L.coeffs[1]) > weil_bound)
    throw Error(ErrorKind::Internal, "c1 violates the Weil bound");
  return {order, L};
}

namespace {

// Dense polynomial helpers modulo a big prime, little-endian, degree <= 3.
using ZPoly = std::vector<Int>;

void zp_trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b, const Int& n) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = (out[i + j] + a[i] * b[j]) % n;
  zp_trim(out);
  return out;
}

// rem := rem mod b; b monic or with invertible lc.
void zp_mod(ZPoly& rem, const ZPoly& b, const Int& n) {
  zp_trim(rem);
  std::size_t db = b.size() - 1;
  if (db == 0) {
    rem.clear();
    return;
  }
  Int inv_lc = invmod(b.back(), n);
  while (rem.size() > db) {
    Int c = rem.back() * inv_lc % n;
    std::size_t shift = rem.size() - 1 - db;
    if (c != 0)
      for (std::size_t j = 0; j <= db; ++j)
        rem[shift + j] = mod_floor(rem[shift + j] - c * b[j], n);
    rem.pop_back();
    zp_trim(rem);
  }
}

ZPoly zp_powmod(ZPoly base, Int e, const ZPoly& m, const Int& n) {
  ZPoly r{Int(1)};
  zp_mod(base, m, n);
  while (e > 0) {
    if (boost::multiprecision::bit_test(e, 0)) {
      r = zp_mul(r, base, n);
      zp_mod(r, m, n);
    }
    base = zp_mul(base, base, n);
    zp_mod(base, m, n);
    e >>= 1;
  }
  return r;
}

ZPoly zp_gcd(ZPoly a, ZPoly b, const Int& n) {
  zp_trim(a);
  zp_trim(b);
  while (!b.empty()) {
    zp_mod(a, b, n);
    std::swap(a, b);
  }
  if (!a.empty()) {
    Int inv_lc = invmod(a.back(), n);
    for (Int& c : a) c = c * inv_lc % n;
  }
  return a;
}

void roots_of_split(const ZPoly& m, const Int& n, std::vector<Int>& out);

// m a product of distinct monic linear factors, degree >= 1.
void split_all(const ZPoly& m, const Int& n, std::vector<Int>& out) {
  if (m.size() == 2) {
    out.push_back(mod_floor(-m[0], n));
    return;
  }
  if (m.size() == 3) {
    // quadratic formula
    Int b = m[1], c = m[0];
    Int disc = mod_floor(b * b - 4 * c, n);
    auto sq = sqrt_mod_prime(disc, n);
    if (!sq) throw Error(ErrorKind::Internal, "split quadratic with non-square disc");
    Int inv2 = invmod(Int(2), n);
    out.push_back(mod_floor((-b + *sq) * inv2, n));
    out.push_back(mod_floor((-b - *sq) * inv2, n));
    return;
  }
  // degree 3: deterministic shifts until gcd((x+a)^((n-1)/2) - 1, m) splits
  for (Int a = 0; a < 4096; ++a) {
    ZPoly shift{a, Int(1)};
    ZPoly w = zp_powmod(shift, (n - 1) / 2, m, n);
    if (w.empty()) w = {Int(0)};
    w[0] = mod_floor(w[0] - 1, n);
    zp_trim(w);
    ZPoly g = zp_gcd(w, m, n);
    if (g.size() > 1 && g.size() < m.size()) {
      split_all(g, n, out);
      ZPoly rest = m;
      // rest / g by repeated mod-free division
      ZPoly quot(rest.size() - g.size() + 1, Int(0));
      ZPoly rem = rest;
      Int inv_lc = invmod(g.back(), n);
      while (rem.size() >= g.size()) {
        Int c = rem.back() * inv_lc % n;
        std::size_t sh = rem.size() - g.size();
        quot[sh] = c;
        for (std::size_t j = 0; j < g.size(); ++j)
          rem[sh + j] = mod_floor(rem[sh + j] - c * g[j], n);
        zp_trim(rem);
        if (rem.size() < g.size()) break;
      }
      split_all(quot, n, out);
      return;
    }
  }
  throw Error(ErrorKind::Internal, "cubic splitting did not converge");
}

}  // namespace

std::vector<Int> eta_eigenvalues(const std::vector<Int>& min_poly, const Int& n) {
  if (n < 3) throw Error(ErrorKind::BadParameter, "subgroup order must be an odd prime");
  ZPoly m(min_poly.size());
  for (std::size_t i = 0; i < min_poly.size(); ++i) m[i] = mod_floor(min_poly[i], n);
  zp_trim(m);
  if (m.size() < 2) throw Error(ErrorKind::NoRoots, "minimal polynomial is constant mod n");

  // isolate the split part
  ZPoly x{Int(0), Int(1)};
  ZPoly xn = zp_powmod(x, n, m, n);
  if (xn.empty()) xn = {Int(0)};
  if (xn.size() < 2) xn.resize(2, Int(0));
  xn[1] = mod_floor(xn[1] - 1, n);
  zp_trim(xn);
  ZPoly lin = zp_gcd(xn, m, n);
  if (lin.size() < 2)
    throw Error(ErrorKind::NoRoots, "no eigenvalue: minimal polynomial has no root mod n");

  std::vector<Int> roots;
  split_all(lin, n, roots);
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  for (const Int& r : roots) {
    Int acc = 0, pw = 1;
    for (const Int& c : min_poly) {
      acc = mod_floor(acc + c * pw, n);
      pw = pw * r % n;
    }
    if (acc != 0) throw Error(ErrorKind::Internal, "eigenvalue fails substitution");
  }
  return roots;
}

Int match_eigenvalue(const Endomorphism& eta, const Divisor& Q,
                     const std::vector<Int>& candidates) {
  Divisor image = endo_evaluate(eta, Q);
  for (const Int& m : candidates)
    if (jac_scalar_mul(Q, m) == image) return m;
  throw Error(ErrorKind::NoMatch, "endomorphism does not act as any candidate scalar");
}

}  // namespace rmjac
