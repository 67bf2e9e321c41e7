#include "rmjac/glv.hpp"

#include <algorithm>

namespace rmjac {

namespace {

Int eval_mod(const std::vector<Int>& poly, const Int& x, const Int& n) {
  Int acc = 0;
  for (std::size_t i = poly.size(); i-- > 0;) acc = mod_floor(acc * x + poly[i], n);
  return acc;
}

Int max_norm(const std::vector<Int>& v) {
  Int m = 0;
  for (const Int& x : v) {
    Int a = boost::multiprecision::abs(x);
    if (a > m) m = a;
  }
  return m;
}

Int round_rat(const Rat& r) {
  return round_div(boost::multiprecision::numerator(r),
                   boost::multiprecision::denominator(r));
}

}  // namespace

void lll_reduce(std::vector<std::vector<Int>>& rows) {
  const int d = (int)rows.size();
  if (d < 2) return;

  std::vector<std::vector<Rat>> mu(d, std::vector<Rat>(d, Rat(0)));
  std::vector<Rat> norm(d, Rat(0));  // squared Gram-Schmidt norms

  auto gso = [&]() {
    std::vector<std::vector<Rat>> star(d, std::vector<Rat>(rows[0].size(), Rat(0)));
    for (int i = 0; i < d; ++i) {
      for (std::size_t c = 0; c < rows[i].size(); ++c) star[i][c] = Rat(rows[i][c]);
      for (int j = 0; j < i; ++j) {
        Rat dot(0);
        for (std::size_t c = 0; c < rows[i].size(); ++c)
          dot += Rat(rows[i][c]) * star[j][c];
        mu[i][j] = norm[j] == 0 ? Rat(0) : dot / norm[j];
        for (std::size_t c = 0; c < rows[i].size(); ++c)
          star[i][c] -= mu[i][j] * star[j][c];
      }
      Rat nn(0);
      for (std::size_t c = 0; c < rows[i].size(); ++c) nn += star[i][c] * star[i][c];
      norm[i] = nn;
    }
  };

  gso();
  const Rat delta(3, 4);
  int k = 1;
  while (k < d) {
    for (int j = k - 1; j >= 0; --j) {
      Int q = round_rat(mu[k][j]);
      if (q != 0) {
        for (std::size_t c = 0; c < rows[k].size(); ++c) rows[k][c] -= q * rows[j][c];
        gso();
      }
    }
    if (norm[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * norm[k - 1]) {
      ++k;
    } else {
      std::swap(rows[k], rows[k - 1]);
      gso();
      k = std::max(k - 1, 1);
    }
  }
}

GlvBasis glv_basis(const Int& n, const Int& m, int dim,
                   const std::vector<Int>& min_poly) {
  if (dim != 2 && dim != 3)
    throw Error(ErrorKind::BadParameter, "dim must be 2 or 3");
  if (n < 2) throw Error(ErrorKind::BadParameter, "n must be a prime > 1");
  Int m0 = mod_floor(m, n);
  if (eval_mod(min_poly, m0, n) != 0)
    throw Error(ErrorKind::BadEigenvalue,
                "m is not a root of the minimal polynomial mod n");

  GlvBasis basis;
  basis.n = n;
  basis.m = m0;
  basis.dim = dim;

  if (dim == 2) {
    // r_i = s_i n + t_i m; take the first remainder below sqrt(n) as v1 and
    // the shorter of its two neighbours as v2.
    Int sqrt_n = boost::multiprecision::sqrt(n);
    std::vector<std::pair<Int, Int>> seq{{n, Int(0)}, {m0, Int(1)}};  // (r, t)
    while (seq.back().first != 0) {
      const auto& [r1, t1] = seq[seq.size() - 1];
      const auto& [r0, t0] = seq[seq.size() - 2];
      Int q = r0 / r1;
      seq.emplace_back(r0 - q * r1, t0 - q * t1);
    }
    std::size_t lp1 = 1;
    while (seq[lp1].first >= sqrt_n) ++lp1;
    auto vec_of = [&](std::size_t i) {
      return std::vector<Int>{seq[i].first, -seq[i].second};
    };
    std::vector<Int> v1 = vec_of(lp1);
    std::vector<Int> v2 = vec_of(lp1 - 1);
    if (lp1 + 1 < seq.size()) {
      std::vector<Int> cand = vec_of(lp1 + 1);
      if (max_norm(cand) < max_norm(v2)) v2 = cand;
    }
    basis.rows = {v1, v2};
  } else {
    basis.rows = {{n, Int(0), Int(0)}, {-m0, Int(1), Int(0)},
                  {-(m0 * m0), Int(0), Int(1)}};
    lll_reduce(basis.rows);
  }

  for (const auto& row : basis.rows) {
    Int acc = 0, pw = 1;
    for (const Int& x : row) {
      acc = mod_floor(acc + x * pw, n);
      pw = pw * m0 % n;
    }
    if (acc != 0)
      throw Error(ErrorKind::Internal, "basis row left the decomposition lattice");
    if (max_norm(row) == 0)
      throw Error(ErrorKind::Internal, "zero basis row");
  }
  return basis;
}

std::vector<Int> glv_decompose(const GlvBasis& basis, const Int& k) {
  const int d = basis.dim;
  const auto& B = basis.rows;

  // Solve y B = (k, 0, ..) exactly via the adjugate, then round.
  Int det;
  std::vector<Int> y_num(d);  // y_i = y_num_i / det
  if (d == 2) {
    det = B[0][0] * B[1][1] - B[0][1] * B[1][0];
    y_num[0] = k * B[1][1];
    y_num[1] = -(k * B[0][1]);
  } else {
    auto minor2 = [&](int r0, int c0, int r1, int c1) {
      return B[r0][c0] * B[r1][c1] - B[r0][c1] * B[r1][c0];
    };
    det = B[0][0] * minor2(1, 1, 2, 2) - B[0][1] * minor2(1, 0, 2, 2) +
          B[0][2] * minor2(1, 0, 2, 1);
    // y_j = k * cofactor(j, 0) / det
    y_num[0] = k * minor2(1, 1, 2, 2);
    y_num[1] = -(k * minor2(0, 1, 2, 2));
    y_num[2] = k * minor2(0, 1, 1, 2);
  }
  if (det == 0) throw Error(ErrorKind::Internal, "degenerate GLV basis");
  if (det < 0) {
    det = -det;
    for (Int& v : y_num) v = -v;
  }
  std::vector<Int> c(d);
  for (int i = 0; i < d; ++i) c[i] = round_div(y_num[i], det);

  std::vector<Int> out(d, Int(0));
  out[0] = k;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) out[j] -= c[i] * B[i][j];

  Int acc = 0, pw = 1;
  for (const Int& x : out) {
    acc = mod_floor(acc + x * pw, basis.n);
    pw = pw * basis.m % basis.n;
  }
  if (acc != mod_floor(k, basis.n))
    throw Error(ErrorKind::Internal, "decomposition violates the congruence");
  return out;
}

Divisor multi_scalar_mul(const std::vector<Divisor>& points,
                         const std::vector<Int>& scalars, OpCounts* counts) {
  if (points.size() != scalars.size() || points.empty())
    throw Error(ErrorKind::BadParameter, "points and scalars must pair up");
  for (const Divisor& P : points)
    if (!P.curve()->same(*points[0].curve()))
      throw Error(ErrorKind::MixedCurves, "points on different curves");

  OpCounts local;
  OpCounts& oc = counts ? *counts : local;
  oc = OpCounts{};

  std::vector<Divisor> pts;
  std::vector<Int> ks;
  unsigned top = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (scalars[i] == 0 || points[i].is_identity()) continue;
    if (scalars[i] < 0) {
      pts.push_back(jac_neg(points[i]));
      ks.push_back(-scalars[i]);
    } else {
      pts.push_back(points[i]);
      ks.push_back(scalars[i]);
    }
    top = std::max(top, bitlen(ks.back()));
  }
  Divisor acc = Divisor::identity(points[0].curve());
  if (pts.empty()) return acc;

  for (unsigned bit = top; bit-- > 0;) {
    if (!acc.is_identity()) {
      acc = jac_add(acc, acc);
      ++oc.doublings;
    }
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (!boost::multiprecision::bit_test(ks[i], bit)) continue;
      if (acc.is_identity()) {
        acc = pts[i];
      } else {
        acc = jac_add(acc, pts[i]);
        ++oc.additions;
      }
    }
  }
  return acc;
}

}  // namespace rmjac
