#ifndef RMJAC_BIGINT_HPP
#define RMJAC_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rmjac {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Number of bits in |x|; bitlen(0) == 0.
unsigned bitlen(const Int& x);

// x mod m normalized into [0, m).
Int mod_floor(const Int& x, const Int& m);

Int powmod(Int base, Int exp, const Int& m);

// Inverse of a modulo m (gcd(a, m) must be 1).
Int invmod(const Int& a, const Int& m);

// Nearest integer to a/b, ties away from zero. b > 0 required.
Int round_div(const Int& a, const Int& b);

// Miller-Rabin with fixed bases (deterministic below 3.3e24) plus extra
// fixed witnesses for larger inputs.
bool is_probable_prime(const Int& n);

// Square root of a modulo an odd prime p (Tonelli-Shanks); nullopt for
// non-residues.
std::optional<Int> sqrt_mod_prime(const Int& a, const Int& p);

// Prime factorization by trial division up to `bound`; the final cofactor,
// if > 1, is appended only when probably prime, otherwise the call fails.
struct Factorization {
  std::vector<std::pair<Int, int>> factors;  // (prime, multiplicity), ascending
  bool complete = true;                      // false if a composite cofactor remained
  Int cofactor = 1;
};
Factorization factor_trial(Int n, std::uint64_t bound = 1000000);

std::string to_decimal(const Int& x);
Int from_decimal(const std::string& s);

}  // namespace rmjac

#endif
