#pragma once

#include <vector>

#include "truncgal/family.hpp"
#include "truncgal/int_polynomial.hpp"

namespace truncgal {

// Exponents of the closed form
//   (-1)^{r(r-1)/2} (t+1)^{r-1} (t+r+1)^{r-1} prod_{k=2}^{r} (t+k)^{r-2} / (r!)^{r-2}.
struct DiscriminantStructure {
  int sign_exponent = 0;
  int outer_exponent = 0;
  int inner_exponent = 0;
  int denominator_exponent = 0;
};

struct DiscriminantValue {
  mpz_class value;
  int sign = 0;
  DiscriminantStructure structured;
};

// Common discriminant of every family form, from the closed product formula.
// Requires r >= 2. Throws std::logic_error if (r!)^{r-2} fails to divide the
// numerator, which would mean the formula (or this code) is wrong.
DiscriminantValue closed_form_discriminant(const FamilyParams& params);

// Determinant of the Sylvester matrix of (f, g), fraction-free elimination.
mpz_class resultant_sylvester(const IntPolynomial& f, const IntPolynomial& g);

// (-1)^{r(r-1)/2} Res(f, f') / lc(f) for deg f = r >= 2.
mpz_class discriminant_via_resultant(const IntPolynomial& f);

// d >= 0 and floor(sqrt(d))^2 == d.
bool is_square(const mpz_class& d);

struct SquareDiscriminantHit {
  i64 t = 0;
  mpz_class discriminant;
  // gcd(t+1, t+r+1); divides r.
  i64 delta = 0;
};

struct EvenSquareSearch {
  int r = 0;
  // Scan covers 0 <= t < bound, bound = r(r-1)^2/4 rounded up.
  i64 bound = 0;
  std::vector<SquareDiscriminantHit> hits;
  // For every scanned t: Delta square <=> Delta > 0 and (t+1)(t+r+1) square.
  bool product_criterion_agrees = true;
};

// Complete list of t with square discriminant for even r >= 4; beyond the
// bound no square can occur. Throws std::invalid_argument for odd or small r.
EvenSquareSearch even_r_square_search(int r);

}  // namespace truncgal
