#ifndef RMJAC_GLV_HPP
#define RMJAC_GLV_HPP

#include "rmjac/jacobian.hpp"

#include <vector>

namespace rmjac {

// Short basis of the lattice {(x_0..x_{d-1}) : sum x_i m^i = 0 mod n}.
struct GlvBasis {
  Int n;
  Int m;
  int dim = 2;
  std::vector<std::vector<Int>> rows;
};

// dim = 2: extended-Euclid halting rule; dim = 3: exact integer LLL
// (delta = 3/4) on {(n,0,0), (-m,1,0), (-m^2,0,1)}. BadEigenvalue when
// min_poly(m) != 0 mod n.
GlvBasis glv_basis(const Int& n, const Int& m, int dim,
                   const std::vector<Int>& min_poly);

// Babai round-off of (k, 0, ..., 0) against the basis; the result
// satisfies sum k_i m^i = k (mod n).
std::vector<Int> glv_decompose(const GlvBasis& basis, const Int& k);

// Exact LLL with delta = 3/4 for fixed dimension <= 3.
void lll_reduce(std::vector<std::vector<Int>>& rows);

struct OpCounts {
  long long doublings = 0;
  long long additions = 0;
};

// sum [k_i] P_i by interleaved binary double-and-add with shared
// doublings (signed scalars handled by negating points).
Divisor multi_scalar_mul(const std::vector<Divisor>& points,
                         const std::vector<Int>& scalars,
                         OpCounts* counts = nullptr);

}  // namespace rmjac

#endif
