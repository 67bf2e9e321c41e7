#ifndef RMJAC_BUNDLE_HPP
#define RMJAC_BUNDLE_HPP

#include "rmjac/families.hpp"

#include <optional>

namespace rmjac {

// Everything the CLI needs about one curve instance: field, curve, its
// endomorphism, the generating parameters, and (optionally) a known prime
// subgroup order with the matched eigenvalue.
struct CurveBundle {
  FamilyParams params;
  FieldRef field;
  CurveRef curve;
  Endomorphism endo;
  std::optional<Int> subgroup_order;
  std::optional<Int> eigenvalue;
};

CurveBundle make_bundle(const FamilyParams& params);

}  // namespace rmjac

#endif
