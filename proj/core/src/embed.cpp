#include "rmjac/embed.hpp"

#include <cassert>

namespace rmjac {

FieldEmbedding::FieldEmbedding(FieldRef from, FieldRef to)
    : from_(std::move(from)), to_(std::move(to)) {
  if (from_->p() != to_->p())
    throw Error(ErrorKind::BadParameter, "embedding across characteristics");
  if (to_->k() % from_->k() != 0)
    throw Error(ErrorKind::BadParameter, "target degree not a multiple of source degree");
  if (from_->is_prime_field()) {
    gen_pows_ = {Fq::one(to_)};
    return;
  }
  if (from_->same(*to_)) {
    Fq r = Fq::generator(to_);
    gen_pows_.resize(from_->k(), Fq::one(to_));
    for (int i = 1; i < from_->k(); ++i) gen_pows_[i] = gen_pows_[i - 1] * r;
    return;
  }
  std::vector<Int> mod_ints;
  mod_ints.reserve(from_->modulus().size());
  for (auto c : from_->modulus()) mod_ints.emplace_back(c);
  Poly m_up = Poly::from_ints(to_, mod_ints);
  Rng rng(0xe3bedULL);
  auto roots = poly_roots(m_up, rng);
  if (roots.empty())
    throw Error(ErrorKind::Internal, "modulus has no root in the target field");
  Fq r = roots.front().first;  // lexicographically smallest
  gen_pows_.resize(from_->k(), Fq::one(to_));
  for (int i = 1; i < from_->k(); ++i) gen_pows_[i] = gen_pows_[i - 1] * r;
}

Fq FieldEmbedding::map(const Fq& x) const {
  if (!x.field()->same(*from_))
    throw Error(ErrorKind::MixedFields, "element not in the source field");
  Fq acc = Fq::zero(to_);
  for (int i = 0; i < from_->k(); ++i) {
    std::uint64_t c = x.coeffs()[i];
    if (c) acc += gen_pows_[i] * Fq::from_int(to_, Int(c));
  }
  return acc;
}

Poly FieldEmbedding::map(const Poly& f) const {
  std::vector<Fq> c;
  c.reserve(f.coeffs().size());
  for (const Fq& x : f.coeffs()) c.push_back(map(x));
  return Poly::from_coeffs(to_, std::move(c));
}

Fq FieldEmbedding::preimage(const Fq& y) const {
  if (!y.field()->same(*to_))
    throw Error(ErrorKind::MixedFields, "element not in the target field");
  const std::uint64_t p = to_->p();
  const int K = to_->k();
  const int k = from_->k();
  // Solve M x = y over F_p, columns of M = coordinates of gen_pows_.
  std::vector<std::vector<std::uint64_t>> aug(K, std::vector<std::uint64_t>(k + 1, 0));
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < K; ++i) aug[i][j] = gen_pows_[j].coeffs()[i];
  for (int i = 0; i < K; ++i) aug[i][k] = y.coeffs()[i];

  auto mulp = [p](std::uint64_t a, std::uint64_t b) {
    return (std::uint64_t)((unsigned __int128)a * b % p);
  };
  auto subp = [p](std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + p - b; };
  auto invp = [p, mulp](std::uint64_t a) {
    std::uint64_t r = 1, b = a, e = p - 2;
    while (e) {
      if (e & 1) r = mulp(r, b);
      b = mulp(b, b);
      e >>= 1;
    }
    return r;
  };

  int row = 0;
  std::vector<int> pivot_row(k, -1);
  for (int col = 0; col < k && row < K; ++col) {
    int sel = -1;
    for (int i = row; i < K; ++i)
      if (aug[i][col] != 0) { sel = i; break; }
    if (sel < 0) continue;
    std::swap(aug[sel], aug[row]);
    std::uint64_t inv = invp(aug[row][col]);
    for (int j = col; j <= k; ++j) aug[row][j] = mulp(aug[row][j], inv);
    for (int i = 0; i < K; ++i) {
      if (i == row || aug[i][col] == 0) continue;
      std::uint64_t factor = aug[i][col];
      for (int j = col; j <= k; ++j)
        aug[i][j] = subp(aug[i][j], mulp(factor, aug[row][j]));
    }
    pivot_row[col] = row;
    ++row;
  }
  std::vector<std::uint64_t> x(k, 0);
  for (int col = 0; col < k; ++col)
    if (pivot_row[col] >= 0) x[col] = aug[pivot_row[col]][k];
  for (int i = row; i < K; ++i)
    if (aug[i][k] != 0)
      throw Error(ErrorKind::Internal, "element is not in the embedded subfield");
  Fq result = Fq::from_coeffs(from_, std::move(x));
  if (map(result) != y)
    throw Error(ErrorKind::Internal, "element is not in the embedded subfield");
  return result;
}

Poly FieldEmbedding::preimage(const Poly& f) const {
  std::vector<Fq> c;
  c.reserve(f.coeffs().size());
  for (const Fq& x : f.coeffs()) c.push_back(preimage(x));
  return Poly::from_coeffs(from_, std::move(c));
}

}  // namespace rmjac
