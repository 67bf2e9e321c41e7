#ifndef RMJAC_ORDER_HPP
#define RMJAC_ORDER_HPP

#include "rmjac/endo.hpp"

#include <utility>
#include <vector>

namespace rmjac {

// Numerator L(T) = 1 + c1 T + ... + c_{2g} T^{2g} of the zeta function;
// |Jac(F_q)| = L(1).
struct LPolynomial {
  Int q;
  int genus = 0;
  std::vector<Int> coeffs;  // 2g+1 entries, coeffs[0] == 1

  Int value_at_one() const;
  // Frobenius power sums s_e for e = 1..e_max via Newton's identities.
  std::vector<Int> power_sums(int e_max) const;
  // Predicted #X(F_{q^e}) = q^e + 1 - s_e.
  Int point_count(int e) const;
};

// #X(F_{q^e}) including the point at infinity, by exhaustive enumeration
// with a precomputed square table. TooLarge when q^e > 10^7.
Int count_curve_points(const CurveRef& curve, int ext_degree);

// Counts over F_{q^e} for e = 1..g, Newton's identities, functional
// equation; returns (|Jac(F_q)|, L).
std::pair<Int, LPolynomial> jacobian_order(const CurveRef& curve);

// All roots of min_poly (little-endian, monic) modulo an odd prime,
// distinct, ascending. NoRoots when there are none.
std::vector<Int> eta_eigenvalues(const std::vector<Int>& min_poly,
                                 const Int& subgroup_order);

// The unique candidate m with eta(Q) = [m]Q. NoMatch otherwise.
Int match_eigenvalue(const Endomorphism& eta, const Divisor& Q,
                     const std::vector<Int>& candidates);

}  // namespace rmjac

#endif
