#include "truncgal/family.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace truncgal {

namespace {

mpz_class binom(i64 n, i64 k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class out;
  mpz_class top = static_cast<long>(n);
  mpz_bin_ui(out.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(k));
  return out;
}

// C(n, k) mod p for n, k < p.
u64 small_binom_mod(u64 n, u64 k, u64 p) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  u64 num = 1, den = 1;
  for (u64 i = 0; i < k; ++i) {
    num = mulmod(num, (n - i) % p, p);
    den = mulmod(den, (i + 1) % p, p);
  }
  return mulmod(num, invmod(den, p), p);
}

u64 lucas(u64 n, u64 k, u64 p) {
  u64 out = 1;
  while (k > 0 || n > 0) {
    u64 ni = n % p, ki = k % p;
    if (ki > ni) return 0;
    out = mulmod(out, small_binom_mod(ni, ki, p), p);
    if (out == 0) return 0;
    n /= p;
    k /= p;
  }
  return out % p;
}

u64 neg_mod(u64 x, u64 p) { return x == 0 ? 0 : p - x; }

}  // namespace

FamilyParams FamilyParams::from_rt(int r, i64 t) {
  if (r < 1) throw std::invalid_argument("family: r must be >= 1");
  if (t < 0) throw std::invalid_argument("family: t must be >= 0");
  if (t > std::numeric_limits<i64>::max() - r - 1) throw std::invalid_argument("family: t too large");
  return FamilyParams(r, t);
}

FamilyParams FamilyParams::from_rn(int r, i64 n) {
  if (r < 1) throw std::invalid_argument("family: r must be >= 1");
  if (n - r - 1 < 0) throw std::invalid_argument("family: need r <= n - 1");
  return FamilyParams(r, n - r - 1);
}

std::string_view to_string(Form form) {
  switch (form) {
    case Form::P: return "P";
    case Form::P_REVERSED: return "P_REVERSED";
    case Form::P_REVERSED_SHIFTED: return "P_REVERSED_SHIFTED";
    case Form::Q: return "Q";
    case Form::Q_SHIFTED: return "Q_SHIFTED";
  }
  return "?";
}

Form parse_form(std::string_view name) {
  for (Form f : {Form::P, Form::P_REVERSED, Form::P_REVERSED_SHIFTED, Form::Q, Form::Q_SHIFTED}) {
    if (to_string(f) == name) return f;
  }
  throw std::invalid_argument("unknown form: " + std::string(name));
}

IntPolynomial build_p(const FamilyParams& params) {
  std::vector<mpz_class> c;
  c.reserve(static_cast<std::size_t>(params.r()) + 1);
  for (int j = 0; j <= params.r(); ++j) c.push_back(binom(params.t() + j, j));
  return IntPolynomial(std::move(c));
}

IntPolynomial build_q(int r, i64 n) {
  if (r < 1 || r > n) throw std::invalid_argument("build_q: need 1 <= r <= n");
  std::vector<mpz_class> c;
  c.reserve(static_cast<std::size_t>(r) + 1);
  for (int j = 0; j <= r; ++j) c.push_back(binom(n, j));
  return IntPolynomial(std::move(c));
}

IntPolynomial reverse(const IntPolynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("reverse: zero polynomial");
  // A zero constant term of f becomes a trailing zero and is stripped.
  return IntPolynomial(std::vector<mpz_class>(f.coeffs().rbegin(), f.coeffs().rend()));
}

IntPolynomial shift(const IntPolynomial& f, const mpz_class& c) {
  std::vector<mpz_class> a = f.coeffs();
  const std::size_t n = a.size();
  // Taylor shift: after pass i, a[i] holds the i-th coefficient of f(x + c).
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t k = n - 1; k-- > i;) a[k] += c * a[k + 1];
  }
  return IntPolynomial(std::move(a));
}

IntPolynomial build_q_shifted(const FamilyParams& params) {
  const int r = params.r();
  const i64 n = params.n();
  std::vector<mpz_class> c;
  c.reserve(static_cast<std::size_t>(r) + 1);
  for (int j = 0; j <= r; ++j) {
    mpz_class cj = binom(n, j) * binom(n - j - 1, r - j);
    if ((r - j) % 2) cj = -cj;
    c.push_back(std::move(cj));
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial build_form(const FamilyParams& params, Form form) {
  switch (form) {
    case Form::P: return build_p(params);
    case Form::P_REVERSED: return reverse(build_p(params));
    case Form::P_REVERSED_SHIFTED: return shift(reverse(build_p(params)), 1);
    case Form::Q: return build_q(params.r(), params.n());
    case Form::Q_SHIFTED: return build_q_shifted(params);
  }
  throw std::logic_error("build_form: bad form");
}

u64 binom_mod_p(u64 n, u64 j, u64 p) {
  if (!is_prime(p)) throw std::invalid_argument("binom_mod_p: modulus is not prime");
  return lucas(n, j, p);
}

FpPoly reduce_family_mod_p(const FamilyParams& params, Form form, u64 p) {
  if (!is_prime(p)) throw std::invalid_argument("reduce_family_mod_p: modulus is not prime");
  if (p >= (u64{1} << 62)) throw std::invalid_argument("reduce_family_mod_p: prime too large");
  const int r = params.r();
  const u64 t = static_cast<u64>(params.t());
  const u64 n = static_cast<u64>(params.n());
  std::vector<u64> c(static_cast<std::size_t>(r) + 1, 0);
  for (int j = 0; j <= r; ++j) {
    const auto uj = static_cast<u64>(j);
    const auto slot = static_cast<std::size_t>(j);
    const auto rev = static_cast<std::size_t>(r - j);
    switch (form) {
      case Form::P: c[slot] = lucas(t + uj, uj, p); break;
      case Form::P_REVERSED: c[rev] = lucas(t + uj, uj, p); break;
      case Form::P_REVERSED_SHIFTED: c[rev] = lucas(n, uj, p); break;
      case Form::Q: c[slot] = lucas(n, uj, p); break;
      case Form::Q_SHIFTED: {
        u64 v = mulmod(lucas(n, uj, p), lucas(n - uj - 1, static_cast<u64>(r - j), p), p);
        c[slot] = (r - j) % 2 ? neg_mod(v, p) : v;
        break;
      }
    }
  }
  return FpPoly(p, std::move(c));
}

}  // namespace truncgal
