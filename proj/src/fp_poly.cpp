#include "truncgal/fp_poly.hpp"

#include <stdexcept>

namespace truncgal {

FpPoly::FpPoly(u64 p, std::vector<u64> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& x : c_) x %= p_;
  normalize();
}

void FpPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::reduce(const IntPolynomial& f, u64 p) {
  std::vector<u64> out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), p);
    out.push_back(r.get_ui());
  }
  return FpPoly(p, std::move(out));
}

FpPoly FpPoly::monomial(u64 p, int degree, u64 coeff) {
  std::vector<u64> c(static_cast<std::size_t>(degree) + 1, 0);
  c.back() = coeff;
  return FpPoly(p, std::move(c));
}

FpPoly FpPoly::derivative() const {
  if (c_.size() <= 1) return FpPoly(p_);
  std::vector<u64> out(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = mulmod(c_[i], i % p_, p_);
  return FpPoly(p_, std::move(out));
}

FpPoly FpPoly::monic() const {
  if (c_.empty()) return *this;
  u64 inv = invmod(leading(), p_);
  std::vector<u64> out(c_);
  for (auto& x : out) x = mulmod(x, inv, p_);
  return FpPoly(p_, std::move(out));
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
  std::vector<u64> out(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    u64 s = a[static_cast<int>(i)] + b[static_cast<int>(i)];
    out[i] = s >= a.p_ ? s - a.p_ : s;
  }
  return FpPoly(a.p_, std::move(out));
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) {
  std::vector<u64> out(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    u64 x = a[static_cast<int>(i)];
    u64 y = b[static_cast<int>(i)];
    out[i] = x >= y ? x - y : x + a.p_ - y;
  }
  return FpPoly(a.p_, std::move(out));
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  if (a.is_zero() || b.is_zero()) return FpPoly(a.p_);
  std::vector<u64> out(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      u64 s = out[i + j] + mulmod(a.c_[i], b.c_[j], a.p_);
      out[i + j] = s >= a.p_ ? s - a.p_ : s;
    }
  }
  return FpPoly(a.p_, std::move(out));
}

void FpPoly::divmod(const FpPoly& a, const FpPoly& b, FpPoly& quot, FpPoly& rem) {
  if (b.is_zero()) throw std::domain_error("FpPoly division by zero");
  const u64 p = a.p_;
  std::vector<u64> r = a.c_;
  if (a.degree() < b.degree()) {
    quot = FpPoly(p);
    rem = a;
    return;
  }
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<u64> q(r.size() - db, 0);
  const u64 inv = invmod(b.leading(), p);
  for (std::size_t k = r.size(); k-- > db;) {
    u64 coef = mulmod(r[k], inv, p);
    q[k - db] = coef;
    if (coef == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) {
      u64 sub = mulmod(coef, b.c_[j], p);
      u64& slot = r[k - db + j];
      slot = slot >= sub ? slot - sub : slot + p - sub;
    }
  }
  r.resize(db);
  quot = FpPoly(p, std::move(q));
  rem = FpPoly(p, std::move(r));
}

FpPoly operator%(const FpPoly& a, const FpPoly& b) {
  FpPoly q(a.p_), r(a.p_);
  FpPoly::divmod(a, b, q, r);
  return r;
}

FpPoly operator/(const FpPoly& a, const FpPoly& b) {
  FpPoly q(a.p_), r(a.p_);
  FpPoly::divmod(a, b, q, r);
  return q;
}

FpPoly gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

FpPoly powmod(const FpPoly& base, u64 exp, const FpPoly& modulus) {
  FpPoly result(modulus.prime(), {1});
  result = result % modulus;
  FpPoly b = base % modulus;
  while (exp) {
    if (exp & 1) result = (result * b) % modulus;
    b = (b * b) % modulus;
    exp >>= 1;
  }
  return result;
}

}  // namespace truncgal
