#pragma once

#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "truncgal/primes.hpp"

namespace truncgal {

// x + y*sqrt(d).
struct QuadraticInteger {
  mpz_class x;
  mpz_class y;
  long d = 0;

  QuadraticInteger operator*(const QuadraticInteger& o) const;
  mpz_class norm() const { return x * x - d * y * y; }
};

// How the m-th orbit element x + y*sqrt(d) yields a solution (u, v) of
// a u^2 - b v^2 = 2.
struct PellExtraction {
  // The rational part is u (otherwise v).
  bool rational_is_u = true;
  // Multiply u (resp. v) by two after extraction: u = 2u', v = 2v'.
  bool double_u = false;
  bool double_v = false;
};

struct PellSolution {
  int m = 0;
  mpz_class u;
  mpz_class v;
  // t = a u^2 - 5, possibly < 1 for the first few m.
  mpz_class t;
};

// One row of the solution table: every positive solution of a u^2 - b v^2 = 2
// for the pair (a, b) arises from initial * step^(m-1), m >= 1.
struct PellOrbit {
  long a = 0;
  long b = 0;
  QuadraticInteger initial;
  QuadraticInteger step;
  PellExtraction extraction;
  std::string description;

  long radicand() const { return initial.d; }
  PellSolution solution(int m) const;
};

// The six orbits for (a, b) = (1,2), (2,1), (2,3), (2,6), (3,1), (6,1).
const std::vector<PellOrbit>& pell_orbits();

enum class ResidueClass { ObstructedMod3, ObstructedMod4, Trivial22, Orbit, Unknown };
std::string to_string(ResidueClass c);

// Classification of a u^2 - b v^2 = 2 for divisors a, b of 6. Throws
// std::invalid_argument for other a, b.
ResidueClass residue_obstruction(long a, long b);

struct OrbitWitness {
  long a = 0;
  long b = 0;
  int m = 0;
  mpz_class u;
  mpz_class v;
};

struct ExceptionalValue {
  i64 t = 0;
  std::vector<OrbitWitness> witnesses;
};

// All t in [1, limit] with t + 5 = a u^2 and t + 3 = b v^2 for divisors a, b of 6,
// ascending.
std::vector<ExceptionalValue> enumerate_exceptional(i64 limit);

// Solutions 1 <= u, v <= bound of a u^q - b v^q = rhs by scanning u and testing
// (a u^q - rhs) / b for an exact q-th power.
std::vector<std::pair<i64, i64>> bounded_thue_search(long a, long b, unsigned q, const mpz_class& rhs, i64 bound);

}  // namespace truncgal
