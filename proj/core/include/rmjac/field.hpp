#ifndef RMJAC_FIELD_HPP
#define RMJAC_FIELD_HPP

#include "rmjac/bigint.hpp"
#include "rmjac/error.hpp"
#include "rmjac/rng.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace rmjac {

class FieldDesc;
using FieldRef = std::shared_ptr<const FieldDesc>;

// Describes F_p or F_{p^k}: an odd word-sized prime p plus, for extensions, a
// monic irreducible modulus of degree k over F_p (little-endian).
class FieldDesc {
 public:
  static FieldRef prime_field(std::uint64_t p);
  static FieldRef extension(std::uint64_t p, std::vector<std::uint64_t> modulus);
  // Deterministic search for an irreducible modulus of degree k.
  static FieldRef extension_of_degree(std::uint64_t p, int k);

  std::uint64_t p() const { return p_; }
  int k() const { return k_; }
  const Int& q() const { return q_; }
  bool is_prime_field() const { return k_ == 1; }
  // Little-endian modulus coefficients, size k+1; empty for prime fields.
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }

  bool same(const FieldDesc& other) const {
    return this == &other || (p_ == other.p_ && modulus_ == other.modulus_);
  }

 private:
  FieldDesc(std::uint64_t p, std::vector<std::uint64_t> modulus);

  std::uint64_t p_;
  int k_;
  std::vector<std::uint64_t> modulus_;
  Int q_;
};

class Fq {
 public:
  Fq() = default;

  static Fq zero(const FieldRef& d);
  static Fq one(const FieldRef& d);
  // Residue embedding of a (possibly negative) integer.
  static Fq from_int(const FieldRef& d, const Int& v);
  static Fq from_coeffs(const FieldRef& d, std::vector<std::uint64_t> coeffs);
  // The generator of the extension (image of x in F_p[x]/(m)); requires k > 1.
  static Fq generator(const FieldRef& d);
  static Fq random(const FieldRef& d, Rng& rng);

  const FieldRef& field() const { return desc_; }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_one() const;

  Fq operator+(const Fq& o) const;
  Fq operator-(const Fq& o) const;
  Fq operator*(const Fq& o) const;
  Fq operator-() const;
  Fq& operator+=(const Fq& o) { return *this = *this + o; }
  Fq& operator-=(const Fq& o) { return *this = *this - o; }
  Fq& operator*=(const Fq& o) { return *this = *this * o; }

  Fq inverse() const;           // DivisionByZero on 0
  Fq pow(const Int& e) const;   // e >= 0; 0^0 == 1
  bool is_square() const;       // true for 0
  std::optional<Fq> sqrt() const;  // lexicographically smaller root

  bool operator==(const Fq& o) const;
  bool operator!=(const Fq& o) const { return !(*this == o); }

  // Strict total order on coefficient sequences (c0 first).
  static bool lex_less(const Fq& a, const Fq& b);

  std::string str() const;

 private:
  Fq(FieldRef d, std::vector<std::uint64_t> c)
      : desc_(std::move(d)), c_(std::move(c)) {}
  void check_same(const Fq& o) const;

  FieldRef desc_;
  std::vector<std::uint64_t> c_;
};

}  // namespace rmjac

#endif
