#pragma once

#include <cstdint>
#include <vector>

#include "truncgal/int_polynomial.hpp"
#include "truncgal/primes.hpp"

namespace truncgal {

// Dense polynomial over the prime field F_p, p < 2^62. Coefficients are
// ascending and kept in [0, p) with trailing zeros stripped.
class FpPoly {
 public:
  FpPoly(u64 p, std::vector<u64> coeffs);
  explicit FpPoly(u64 p) : p_(p) {}

  static FpPoly reduce(const IntPolynomial& f, u64 p);
  static FpPoly monomial(u64 p, int degree, u64 coeff = 1);

  u64 prime() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<u64>& coeffs() const { return c_; }
  u64 leading() const { return c_.back(); }
  u64 operator[](int i) const { return (i < 0 || i > degree()) ? 0 : c_[static_cast<std::size_t>(i)]; }

  FpPoly derivative() const;
  FpPoly monic() const;

  friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
  friend bool operator==(const FpPoly&, const FpPoly&) = default;

  // Euclidean division; divisor must be nonzero.
  static void divmod(const FpPoly& a, const FpPoly& b, FpPoly& quot, FpPoly& rem);
  friend FpPoly operator%(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator/(const FpPoly& a, const FpPoly& b);

 private:
  void normalize();
  u64 p_;
  std::vector<u64> c_;
};

// Monic gcd; gcd(0, 0) = 0.
FpPoly gcd(FpPoly a, FpPoly b);

// base^exp mod modulus.
FpPoly powmod(const FpPoly& base, u64 exp, const FpPoly& modulus);

}  // namespace truncgal
