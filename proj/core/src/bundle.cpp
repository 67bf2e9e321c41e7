#include "rmjac/bundle.hpp"

namespace rmjac {

CurveBundle make_bundle(const FamilyParams& params) {
  CurveWithEndo ce = make_family(params);
  CurveBundle bundle;
  bundle.params = params;
  bundle.field = params.field;
  bundle.curve = ce.curve;
  bundle.endo = std::move(ce.endo);
  return bundle;
}

}  // namespace rmjac
