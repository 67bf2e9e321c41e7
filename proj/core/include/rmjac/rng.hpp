#ifndef RMJAC_RNG_HPP
#define RMJAC_RNG_HPP

#include "rmjac/bigint.hpp"

#include <cstdint>
#include <random>

namespace rmjac {

// Deterministic source of randomness. All sampling helpers are written out
// explicitly (no std distributions) so that a seed pins the byte stream on
// every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform in [0, bound), bound > 0; rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    for (;;) {
      std::uint64_t v = eng_();
      if (v < limit) return v % bound;
    }
  }

  bool coin() { return (eng_() & 1) != 0; }

  // Uniform in [0, bound) for big bounds.
  Int int_below(const Int& bound) {
    unsigned bits = bitlen(bound - 1);
    for (;;) {
      Int v = 0;
      for (unsigned got = 0; got < bits; got += 64) {
        v <<= 64;
        v |= Int(eng_());
      }
      unsigned excess = ((bits + 63) / 64) * 64 - bits;
      v >>= excess;
      if (v < bound) return v;
    }
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace rmjac

#endif
