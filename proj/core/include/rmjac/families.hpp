#ifndef RMJAC_FAMILIES_HPP
#define RMJAC_FAMILIES_HPP

#include "rmjac/endo.hpp"

#include <optional>

namespace rmjac {

enum class Family { ArtinSchreier, Cyclotomic, MestreG2, MestreG3 };

const char* family_name(Family f);
Family family_from_name(const std::string& name);

struct FamilyParams {
  Family family = Family::ArtinSchreier;
  int p_or_n = 5;  // p for Artin-Schreier, n for cyclotomic; 5/7 by genus for Mestre
  FieldRef field;
  Fq t;
  std::optional<Fq> s;    // Mestre only
  std::optional<Fq> tau;  // cyclotomic only; found by root search when absent
};

struct CurveWithEndo {
  CurveRef curve;
  Endomorphism endo;
};

// Degree-n Dickson polynomial of the first kind with parameter 1,
// integer coefficients, little-endian.
std::vector<Int> dickson(int n);
Poly dickson_poly(const FieldRef& d, int n);

// x^2 + x - 1 resp. x^3 + x^2 - 2x - 1, little-endian.
std::vector<Int> min_poly_eta5();
std::vector<Int> min_poly_eta7();

// v^2 = u(u^((p-1)/2) - 1)^2 - 4t over characteristic p, p in {5, 7}.
CurveWithEndo make_artin_schreier(const FieldRef& d, int p, const Fq& t);

// v^2 = D_n(u, 1) + t, n in {5, 7}; tau a root of the trace polynomial.
CurveWithEndo make_cyclotomic(const FieldRef& d, int n, const Fq& t,
                              std::optional<Fq> tau = std::nullopt);

// Genus-2 family v^2 = u^4(u-s) - s(u+1)(u-s)^3 + s^3 u^3 - t u^2 (u-s)^2.
CurveWithEndo make_mestre_g2(const FieldRef& d, const Fq& s, const Fq& t);

// Genus-3 family v^2 = phi_7(u) - t psi_7(u)^2.
CurveWithEndo make_mestre_g3(const FieldRef& d, const Fq& s, const Fq& t);

CurveWithEndo make_family(const FamilyParams& params);

}  // namespace rmjac

#endif
