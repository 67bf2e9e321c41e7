#ifndef RMJAC_EMBED_HPP
#define RMJAC_EMBED_HPP

#include "rmjac/poly.hpp"

#include <vector>

namespace rmjac {

// F_p-linear embedding of F_{p^k} into F_{p^K} with k | K. Canonical: the
// generator of `from` maps to the lexicographically smallest root of the
// `from` modulus in `to`.
class FieldEmbedding {
 public:
  FieldEmbedding(FieldRef from, FieldRef to);

  const FieldRef& from() const { return from_; }
  const FieldRef& to() const { return to_; }

  Fq map(const Fq& x) const;
  Poly map(const Poly& f) const;

  // Inverse of map(); Internal error when the element is not in the image.
  Fq preimage(const Fq& y) const;
  Poly preimage(const Poly& f) const;

 private:
  FieldRef from_, to_;
  std::vector<Fq> gen_pows_;  // images of 1, g, ..., g^(k-1)
};

}  // namespace rmjac

#endif
