#include "rmjac/bigint.hpp"

#include "rmjac/error.hpp"

#include <boost/multiprecision/integer.hpp>

namespace rmjac {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::MixedFields: return "MixedFields";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::EvenDegree: return "EvenDegree";
    case ErrorKind::NotSquarefree: return "NotSquarefree";
    case ErrorKind::CharacteristicTwo: return "CharacteristicTwo";
    case ErrorKind::InvalidDivisor: return "InvalidDivisor";
    case ErrorKind::MixedCurves: return "MixedCurves";
    case ErrorKind::FieldTooSmall: return "FieldTooSmall";
    case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorKind::DegenerateSupport: return "DegenerateSupport";
    case ErrorKind::ExtensionTooLarge: return "ExtensionTooLarge";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NoRoots: return "NoRoots";
    case ErrorKind::NoMatch: return "NoMatch";
    case ErrorKind::BadEigenvalue: return "BadEigenvalue";
    case ErrorKind::WrongCharacteristic: return "WrongCharacteristic";
    case ErrorKind::SingularCurve: return "SingularCurve";
    case ErrorKind::NoTauInField: return "NoTauInField";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

unsigned bitlen(const Int& x) {
  if (x == 0) return 0;
  return boost::multiprecision::msb(boost::multiprecision::abs(x)) + 1;
}

Int mod_floor(const Int& x, const Int& m) {
  Int r = x % m;
  if (r < 0) r += boost::multiprecision::abs(m);
  return r;
}

Int powmod(Int base, Int exp, const Int& m) {
  if (m == 1) return 0;
  base = mod_floor(base, m);
  Int result = 1;
  while (exp > 0) {
    if (boost::multiprecision::bit_test(exp, 0)) result = result * base % m;
    base = base * base % m;
    exp >>= 1;
  }
  return result;
}

Int invmod(const Int& a, const Int& m) {
  Int r0 = m, r1 = mod_floor(a, m);
  Int s0 = 0, s1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    Int s2 = s0 - q * s1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
  }
  if (r0 != 1)
    throw Error(ErrorKind::DivisionByZero, "element not invertible modulo m");
  return mod_floor(s0, m);
}

Int round_div(const Int& a, const Int& b) {
  // b > 0; round half away from zero
  Int two_a = 2 * a;
  if (a >= 0) return (two_a + b) / (2 * b);
  return -((-two_a + b) / (2 * b));
}

namespace {

bool miller_rabin_witness(const Int& n, const Int& a, const Int& d, unsigned r) {
  Int x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned i = 1; i < r; ++i) {
    x = x * x % n;
    if (x == n - 1) return false;
  }
  return true;  // composite witness
}

}  // namespace

bool is_probable_prime(const Int& n) {
  if (n < 2) return false;
  static const int small_primes[] = {2,  3,  5,  7,  11, 13, 17, 19,
                                     23, 29, 31, 37, 41, 43, 47};
  for (int p : small_primes) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  Int d = n - 1;
  unsigned r = 0;
  while (!boost::multiprecision::bit_test(d, 0)) {
    d >>= 1;
    ++r;
  }
  // Fixed bases: deterministic for n < 3.3e24; strong probabilistic
  // evidence beyond.
  static const int bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37,
                              41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89};
  for (int a : bases) {
    if (miller_rabin_witness(n, a, d, r)) return false;
  }
  return true;
}

std::optional<Int> sqrt_mod_prime(const Int& a0, const Int& p) {
  Int a = mod_floor(a0, p);
  if (a == 0) return Int(0);
  if (p == 2) return a;
  if (powmod(a, (p - 1) / 2, p) != 1) return std::nullopt;
  if (p % 4 == 3) {
    Int r = powmod(a, (p + 1) / 4, p);
    return r;
  }
  // Tonelli-Shanks
  Int q = p - 1;
  unsigned s = 0;
  while (!boost::multiprecision::bit_test(q, 0)) {
    q >>= 1;
    ++s;
  }
  Int z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
  Int m = s;
  Int c = powmod(z, q, p);
  Int t = powmod(a, q, p);
  Int r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    Int i = 0;
    Int tt = t;
    while (tt != 1) {
      tt = tt * tt % p;
      ++i;
      if (i == m) return std::nullopt;  // unreachable for prime p
    }
    Int b = c;
    for (Int j = 0; j < m - i - 1; ++j) b = b * b % p;
    m = i;
    c = b * b % p;
    t = t * c % p;
    r = r * b % p;
  }
  return r;
}

Factorization factor_trial(Int n, std::uint64_t bound) {
  Factorization out;
  if (n < 0) n = -n;
  if (n <= 1) return out;
  auto push = [&](const Int& p) {
    int m = 0;
    while (n % p == 0) {
      n /= p;
      ++m;
    }
    if (m) out.factors.emplace_back(p, m);
  };
  push(2);
  for (std::uint64_t d = 3; d <= bound && Int(d) * d <= n; d += 2) push(Int(d));
  if (n > 1) {
    if (is_probable_prime(n)) {
      out.factors.emplace_back(n, 1);
    } else {
      out.complete = false;
      out.cofactor = n;
    }
  }
  return out;
}

std::string to_decimal(const Int& x) { return x.str(); }

Int from_decimal(const std::string& s) {
  if (s.empty()) throw Error(ErrorKind::BadParameter, "empty integer literal");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw Error(ErrorKind::BadParameter, "bad integer literal: " + s);
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9')
      throw Error(ErrorKind::BadParameter, "bad integer literal: " + s);
  return Int(s);
}

}  // namespace rmjac
