#pragma once

#include <string>
#include <vector>

#include "truncgal/family.hpp"
#include "truncgal/fp_poly.hpp"

namespace truncgal {

// Irreducible-factor degrees of a polynomial over F_p. For a squarefree
// reduction of an irreducible rational polynomial at a prime not dividing its
// discriminant, this is the cycle type of a Frobenius element.
struct FactorizationPattern {
  u64 prime = 0;
  // Ascending; empty when the polynomial is not squarefree.
  std::vector<int> degrees;
  bool squarefree = false;

  bool is(std::initializer_list<int> sorted_degrees) const;
  std::string to_string() const;
  friend bool operator==(const FactorizationPattern&, const FactorizationPattern&) = default;
};

// gcd(f, f') has degree 0. Throws std::invalid_argument for f of degree < 1.
bool squarefree_mod_p(const FpPoly& f);

// Distinct-degree factorization, degrees only. A non-squarefree input yields
// squarefree == false and no degrees.
FactorizationPattern factor_pattern(const FpPoly& f);

bool irreducible_mod_p(const FpPoly& f);

enum class CycleTypeStatus {
  Certified,
  // p divides the discriminant; the pattern does not certify a cycle type.
  DividesDiscriminant,
  // Leading coefficient vanishes mod p; degree would collapse.
  LeadingVanishes,
};

struct CycleTypeResult {
  CycleTypeStatus status = CycleTypeStatus::Certified;
  FactorizationPattern pattern;
  bool ok() const { return status == CycleTypeStatus::Certified; }
};

// Dedekind cycle type of the family member at p, read from the reduction of
// `form`. Irreducibility over Q is the caller's responsibility.
CycleTypeResult dedekind_cycle_type(const FamilyParams& params, u64 p, Form form = Form::P);

// Same, with the discriminant supplied so p | disc is decided exactly.
CycleTypeResult dedekind_cycle_type(const FamilyParams& params, u64 p, const mpz_class& discriminant,
                                    Form form = Form::P);

}  // namespace truncgal
