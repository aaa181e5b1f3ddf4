#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace truncgal {

// Univariate polynomial with exact integer coefficients, ascending powers.
// Trailing zeros are always stripped; the zero polynomial has no coefficients
// and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<long> coeffs);
  explicit IntPolynomial(std::vector<mpz_class> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  const std::vector<mpz_class>& coeffs() const { return coeffs_; }

  // Coefficient of x^i; zero beyond the degree.
  mpz_class operator[](int i) const;

  const mpz_class& leading() const { return coeffs_.back(); }

  IntPolynomial derivative() const;

  mpz_class evaluate(const mpz_class& x) const;

  std::string to_string() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void normalize();
  std::vector<mpz_class> coeffs_;
};

}  // namespace truncgal
