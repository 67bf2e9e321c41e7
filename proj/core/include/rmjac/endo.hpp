#ifndef RMJAC_ENDO_HPP
#define RMJAC_ENDO_HPP

#include "rmjac/jacobian.hpp"

#include <vector>

namespace rmjac {

// Trace/norm tables t_i, n_{i,j} (0 <= i <= j <= genus) built from the
// elementary symmetric functions t1 = e1 + e2 and n1 = e1*e2 of the
// correspondence roots. e2_den is the monic lcm of the denominators of t1
// and n1 (1 when both are polynomials).
struct TNTables {
  int genus = 0;
  std::vector<RatFun> t;               // t[0..genus]
  std::vector<std::vector<RatFun>> n;  // n[i][j - i] holds n_{i,j}, j >= i
  Poly e2_den;

  const RatFun& nij(int i, int j) const;
};

TNTables rational_maps(const RatFun& t1, const RatFun& n1, int genus);

// T(a) = sum a_i t_i and N(a) = sum_{i<=j} a_i a_j n_{i,j}; deg a <= genus.
RatFun apply_T(const TNTables& tables, const Poly& a);
RatFun apply_N(const TNTables& tables, const Poly& a);

struct Endomorphism {
  CurveRef curve;
  TNTables tables;
  std::vector<Int> min_poly;  // little-endian, monic

  const RatFun& t1() const { return tables.t[1]; }
  const RatFun& n1() const { return tables.n[1][0]; }
};

Endomorphism make_endomorphism(CurveRef curve, const RatFun& t1, const RatFun& n1,
                               std::vector<Int> min_poly);

struct EndoEvalStats {
  bool fallback_used = false;
  int reduce_iterations = 0;
  bool gcd_was_one = true;
};

// Image of P under the endomorphism via the trace/norm ideal computation,
// falling back to the pointwise path on non-generic inputs.
Divisor endo_evaluate(const Endomorphism& eta, const Divisor& P,
                      EndoEvalStats* stats = nullptr);

// Divisor-level evaluation: factor a over a splitting field, push each
// support point through the correspondence, sum the images, and coerce the
// (Galois-stable) result back down. Serves as oracle and fallback.
Divisor endo_evaluate_pointwise(const Endomorphism& eta, const Divisor& P,
                                int max_ext_degree);

// sum_i [min_poly_i] eta^i(P); identity iff the minimal polynomial
// annihilates P.
Divisor endo_min_poly_apply(const Endomorphism& eta, const Divisor& P);

}  // namespace rmjac

#endif
