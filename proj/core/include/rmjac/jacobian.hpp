#ifndef RMJAC_JACOBIAN_HPP
#define RMJAC_JACOBIAN_HPP

#include "rmjac/poly.hpp"

#include <memory>
#include <string>

namespace rmjac {

class Curve;
using CurveRef = std::shared_ptr<const Curve>;

// Imaginary hyperelliptic model v^2 = f(u), f monic squarefree of odd
// degree 2g+1 >= 5 over an odd-characteristic field.
class Curve {
 public:
  static CurveRef make(FieldRef field, Poly f);

  const FieldRef& field() const { return field_; }
  const Poly& f() const { return f_; }
  int genus() const { return genus_; }

  bool same(const Curve& o) const {
    return this == &o || (field_->same(*o.field_) && f_ == o.f_);
  }

 private:
  Curve(FieldRef field, Poly f, int genus)
      : field_(std::move(field)), f_(std::move(f)), genus_(genus) {}
  FieldRef field_;
  Poly f_;
  int genus_;
};

// Mumford representative (a, v - b): a monic, deg b < deg a, a | b^2 - f.
// The identity class is (1, 0).
class Divisor {
 public:
  Divisor(CurveRef curve, Poly a, Poly b);
  static Divisor identity(const CurveRef& curve);

  const CurveRef& curve() const { return curve_; }
  const Poly& a() const { return a_; }
  const Poly& b() const { return b_; }
  bool is_identity() const { return a_.is_one(); }
  bool is_reduced() const { return is_identity() || a_.degree() <= curve_->genus(); }

  bool operator==(const Divisor& o) const;
  bool operator!=(const Divisor& o) const { return !(*this == o); }

  std::string str() const;

 private:
  CurveRef curve_;
  Poly a_, b_;
};

// Degree-1 divisor [(u0, v0)] - [inf]; requires v0^2 = f(u0).
Divisor point_divisor(const CurveRef& curve, const Fq& u0, const Fq& v0);

struct Reduction {
  Divisor divisor;
  int iterations;
};

// Reduction loop on a semi-reduced pair; returns the reduced representative
// and the number of iterations of the main loop.
Reduction cantor_reduce(const CurveRef& curve, Poly a, Poly b);

Divisor jac_add(const Divisor& P, const Divisor& Q);
Divisor jac_neg(const Divisor& P);
Divisor jac_scalar_mul(const Divisor& P, const Int& k);

// Reduced divisor built from <= g random affine points; deterministic in
// the rng state. FieldTooSmall after 100*g consecutive non-square samples.
Divisor random_divisor(const CurveRef& curve, Rng& rng);
Divisor random_divisor(const CurveRef& curve, std::uint64_t seed);

}  // namespace rmjac

#endif
