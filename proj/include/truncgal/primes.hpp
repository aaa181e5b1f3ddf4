#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace truncgal {

using u64 = std::uint64_t;
using i64 = std::int64_t;

inline u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 powmod(u64 base, u64 exp, u64 m);

// Inverse of a modulo prime p; a must be nonzero mod p.
u64 invmod(u64 a, u64 p);

// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(u64 n);

// Primality of an arbitrary-size integer. Exact below 2^64, BPSW-strength above.
bool is_prime(const mpz_class& n);

// All primes p <= limit in ascending order.
std::vector<u64> primes_up_to(u64 limit);

// Largest e with p^e | n. n must be nonzero.
unsigned valuation(const mpz_class& n, const mpz_class& p);

struct PrimePower {
  mpz_class prime;
  unsigned exponent = 0;
};

// Prime factorization of |n| by trial division up to min(trial_limit, sqrt),
// with a primality test on the cofactor. A composite cofactor left after trial
// division is reported in `unfactored` and omitted from the list.
struct Factorization {
  std::vector<PrimePower> factors;
  mpz_class unfactored = 1;
};
Factorization factor(const mpz_class& n, u64 trial_limit);

}  // namespace truncgal
