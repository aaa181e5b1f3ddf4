#pragma once

#include <string_view>

#include "truncgal/fp_poly.hpp"
#include "truncgal/int_polynomial.hpp"
#include "truncgal/primes.hpp"

namespace truncgal {

// One member of the truncated-binomial family. The truncation degree r and the
// derivative index t determine the binomial upper index n = t + r + 1.
class FamilyParams {
 public:
  // r >= 1, t >= 0.
  static FamilyParams from_rt(int r, i64 t);
  // 1 <= r <= n - 1, i.e. t = n - r - 1 >= 0.
  static FamilyParams from_rn(int r, i64 n);

  int r() const { return r_; }
  i64 t() const { return t_; }
  i64 n() const { return t_ + r_ + 1; }

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;

 private:
  FamilyParams(int r, i64 t) : r_(r), t_(t) {}
  int r_;
  i64 t_;
};

// The equivalent presentations sharing discriminant and Galois group.
//   P                   p_{r,t}(x)        = sum_j C(t+j, j) x^j
//   P_REVERSED          x^r p_{r,t}(1/x)
//   P_REVERSED_SHIFTED  x^r p_{r,t}(1/x) evaluated at x+1
//   Q                   q_{r,n}(x)        = sum_j C(n, j) x^j
//   Q_SHIFTED           q_{r,n}(x-1)
enum class Form { P, P_REVERSED, P_REVERSED_SHIFTED, Q, Q_SHIFTED };

std::string_view to_string(Form form);
Form parse_form(std::string_view name);

IntPolynomial build_p(const FamilyParams& params);

// Degree-r truncation of (1+x)^n. Throws std::invalid_argument unless 1 <= r <= n.
IntPolynomial build_q(int r, i64 n);

// x^deg(f) f(1/x). f must be nonzero.
IntPolynomial reverse(const IntPolynomial& f);

// f(x + c), by repeated synthetic division.
IntPolynomial shift(const IntPolynomial& f, const mpz_class& c);

// q_{r,n}(x-1) from the closed coefficient formula
// c_j = C(n, j) C(n-j-1, r-j) (-1)^(r-j), independent of shift().
IntPolynomial build_q_shifted(const FamilyParams& params);

IntPolynomial build_form(const FamilyParams& params, Form form);

// C(n, j) mod p by Lucas' theorem. Throws std::invalid_argument if p is not prime.
u64 binom_mod_p(u64 n, u64 j, u64 p);

// Coefficient-wise reduction of a family member without building the exact
// polynomial. Reductions go through binom_mod_p, so cost is O(r log_p n).
FpPoly reduce_family_mod_p(const FamilyParams& params, Form form, u64 p);

}  // namespace truncgal
