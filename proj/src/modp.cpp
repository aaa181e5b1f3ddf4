#include "truncgal/modp.hpp"

#include <algorithm>
#include <stdexcept>

#include "truncgal/disc.hpp"

namespace truncgal {

bool FactorizationPattern::is(std::initializer_list<int> sorted_degrees) const {
  return squarefree && std::equal(degrees.begin(), degrees.end(), sorted_degrees.begin(), sorted_degrees.end());
}

std::string FactorizationPattern::to_string() const {
  if (!squarefree) return "{not squarefree}";
  std::string out = "{";
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(degrees[i]);
  }
  return out + "}";
}

bool squarefree_mod_p(const FpPoly& f) {
  if (f.degree() < 1) throw std::invalid_argument("squarefree_mod_p: need degree >= 1 mod p");
  return gcd(f, f.derivative()).degree() == 0;
}

FactorizationPattern factor_pattern(const FpPoly& f) {
  FactorizationPattern out;
  out.prime = f.prime();
  out.squarefree = squarefree_mod_p(f);
  if (!out.squarefree) return out;

  const u64 p = f.prime();
  const FpPoly x = FpPoly::monomial(p, 1);
  FpPoly rest = f.monic();
  FpPoly h = x % rest;
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    h = powmod(h, p, rest);
    FpPoly g = gcd(rest, h - x);
    if (g.degree() > 0) {
      out.degrees.insert(out.degrees.end(), static_cast<std::size_t>(g.degree() / d), d);
      rest = rest / g;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.degrees.push_back(rest.degree());
  std::sort(out.degrees.begin(), out.degrees.end());
  return out;
}

bool irreducible_mod_p(const FpPoly& f) {
  if (f.degree() < 1) throw std::invalid_argument("irreducible_mod_p: need degree >= 1");
  const FactorizationPattern pat = factor_pattern(f);
  return pat.squarefree && pat.degrees.size() == 1;
}

CycleTypeResult dedekind_cycle_type(const FamilyParams& params, u64 p, const mpz_class& discriminant, Form form) {
  CycleTypeResult out;
  const FpPoly f = reduce_family_mod_p(params, form, p);
  out.pattern.prime = p;
  if (f.degree() != params.r()) {
    out.status = CycleTypeStatus::LeadingVanishes;
    return out;
  }
  if (mpz_divisible_ui_p(discriminant.get_mpz_t(), p)) {
    out.status = CycleTypeStatus::DividesDiscriminant;
    return out;
  }
  out.pattern = factor_pattern(f);
  if (!out.pattern.squarefree) {
    // Cannot happen when p does not divide the discriminant and the degree is kept.
    throw std::logic_error("dedekind_cycle_type: reduction not squarefree at a good prime");
  }
  return out;
}

CycleTypeResult dedekind_cycle_type(const FamilyParams& params, u64 p, Form form) {
  const mpz_class disc = params.r() >= 2 ? closed_form_discriminant(params).value : mpz_class(1);
  return dedekind_cycle_type(params, p, disc, form);
}

}  // namespace truncgal
