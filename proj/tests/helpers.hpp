#ifndef RMJAC_TESTS_HELPERS_HPP
#define RMJAC_TESTS_HELPERS_HPP

#include "rmjac/families.hpp"
#include "rmjac/jacobian.hpp"

#include <vector>

namespace rmjac::testing {

inline FieldRef f5() {
  static FieldRef d = FieldDesc::prime_field(5);
  return d;
}

inline FieldRef f7() {
  static FieldRef d = FieldDesc::prime_field(7);
  return d;
}

inline FieldRef f1009() {
  static FieldRef d = FieldDesc::prime_field(1009);
  return d;
}

// F_5[xi] with xi^37 + 4 xi^2 + 3 xi + 3 = 0.
inline FieldRef f5_37() {
  static FieldRef d = [] {
    std::vector<std::uint64_t> mod(38, 0);
    mod[0] = 3;
    mod[1] = 3;
    mod[2] = 4;
    mod[37] = 1;
    return FieldDesc::extension(5, std::move(mod));
  }();
  return d;
}

// t = 3 xi^5 + xi^4 + 3 xi^3 + xi^2 + 2 xi + 3.
inline Fq t_5_37() {
  return Fq::from_coeffs(f5_37(), {3, 2, 1, 3, 1, 3});
}

inline Poly mp(const FieldRef& d, std::initializer_list<long long> coeffs) {
  std::vector<Int> v;
  for (long long c : coeffs) v.emplace_back(c);
  return Poly::from_ints(d, v);
}

inline Fq fe(const FieldRef& d, long long v) { return Fq::from_int(d, Int(v)); }

// Published subgroup order and eigenvalue of the F_{5^37} instance.
inline Int n_5_37() {
  return Int("1058791184067701689674637025340531565456011790341311");
}
inline Int m_5_37() {
  return Int("336894053941004885519266617028956898972619907667301");
}

}  // namespace rmjac::testing

#endif
