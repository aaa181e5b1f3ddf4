#include "truncgal/primes.hpp"

#include <stdexcept>

namespace truncgal {

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 invmod(u64 a, u64 p) {
  a %= p;
  if (a == 0) throw std::domain_error("invmod: zero has no inverse");
  return powmod(a, p - 2, p);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are sufficient for every n < 3.3e24.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_prime(const mpz_class& n) {
  if (sgn(n) <= 0) return false;
  if (mpz_fits_ulong_p(n.get_mpz_t())) return is_prime(static_cast<u64>(n.get_ui()));
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

std::vector<u64> primes_up_to(u64 limit) {
  std::vector<u64> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (u64 i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

unsigned valuation(const mpz_class& n, const mpz_class& p) {
  if (n == 0) throw std::domain_error("valuation of zero is infinite");
  mpz_class rest;
  return static_cast<unsigned>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

Factorization factor(const mpz_class& n, u64 trial_limit) {
  if (n == 0) throw std::domain_error("factor: zero");
  Factorization out;
  mpz_class rest = abs(n);
  for (u64 p = 2; p <= trial_limit; p += (p == 2 ? 1 : 2)) {
    if (rest == 1) break;
    mpz_class pp = p;
    if (pp * pp > rest) break;
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      unsigned e = static_cast<unsigned>(mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), pp.get_mpz_t()));
      out.factors.push_back({pp, e});
    }
  }
  if (rest > 1) {
    if (is_prime(rest)) {
      out.factors.push_back({rest, 1});
    } else {
      out.unfactored = rest;
    }
  }
  return out;
}

}  // namespace truncgal
