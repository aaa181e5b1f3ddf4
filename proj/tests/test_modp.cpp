#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "truncgal/disc.hpp"
#include "truncgal/modp.hpp"

using namespace truncgal;

namespace {

// All monic polynomials of the given degree over F_p.
std::vector<FpPoly> monics(u64 p, int degree) {
  std::vector<FpPoly> out;
  std::vector<u64> c(static_cast<std::size_t>(degree) + 1, 0);
  c.back() = 1;
  std::function<void(int)> rec = [&](int i) {
    if (i == degree) {
      out.emplace_back(p, c);
      return;
    }
    for (u64 v = 0; v < p; ++v) {
      c[static_cast<std::size_t>(i)] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

// Factor by trial division against every monic polynomial of degree <= deg/2.
// Returns degrees with multiplicity, ascending.
std::vector<int> trial_factor_degrees(FpPoly f) {
  f = f.monic();
  std::vector<int> out;
  const u64 p = f.prime();
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    for (const FpPoly& g : monics(p, d)) {
      while (f.degree() >= d && (f % g).is_zero()) {
        out.push_back(d);
        f = f / g;
      }
    }
  }
  if (f.degree() >= 1) out.push_back(f.degree());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("factor_pattern examples") {
  CHECK(factor_pattern(FpPoly(2, {1, 1, 1})).is({2}));
  CHECK(factor_pattern(FpPoly(5, {1, 0, 1})).is({1, 1}));
  CHECK(irreducible_mod_p(FpPoly(3, {1, 0, 1})));
  CHECK_FALSE(irreducible_mod_p(FpPoly(5, {1, 0, 1})));
  const auto sq = factor_pattern(FpPoly(3, {1, 2, 1}));  // (x+1)^2
  CHECK_FALSE(sq.squarefree);
  CHECK(sq.degrees.empty());
  CHECK_FALSE(irreducible_mod_p(FpPoly(3, {1, 2, 1})));
  CHECK_THROWS_AS(squarefree_mod_p(FpPoly(7, {3})), std::invalid_argument);
  CHECK(factor_pattern(FpPoly(7, {1, 1})).to_string() == "{1}");
}

TEST_CASE("DDF agrees with trial division over small fields") {
  std::mt19937_64 rng(5);
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    for (int degree = 1; degree <= 6; ++degree) {
      std::uniform_int_distribution<u64> coef(0, p - 1);
      for (int trial = 0; trial < 40; ++trial) {
        std::vector<u64> c(static_cast<std::size_t>(degree) + 1);
        for (auto& x : c) x = coef(rng);
        c.back() = 1 + coef(rng) % (p - 1);
        const FpPoly f(p, c);
        const FactorizationPattern pat = factor_pattern(f);
        CHECK(pat.prime == p);
        CHECK(pat.squarefree == squarefree_mod_p(f));
        const auto oracle = trial_factor_degrees(f);
        if (pat.squarefree) {
          CHECK(pat.degrees == oracle);
        } else {
          // A repeated factor shows up as a repeated degree in the oracle.
          CHECK(std::adjacent_find(oracle.begin(), oracle.end()) != oracle.end());
        }
      }
    }
  }
}

TEST_CASE("product of known irreducibles has the expected pattern") {
  const FpPoly a(7, {1, 0, 1});
  const FpPoly b(7, {3, 0, 0, 0, 1});
  const FpPoly c(7, {1, 1});
  const FpPoly f = a * b * c;
  const auto oracle = trial_factor_degrees(f);
  CHECK(factor_pattern(f).degrees == oracle);
  CHECK(irreducible_mod_p(a));
}

TEST_CASE("squarefree mod p iff p does not divide the discriminant") {
  const auto primes = primes_up_to(1000);
  for (int r = 2; r <= 6; ++r) {
    for (i64 t = 0; t <= 50; t += 7) {
      const auto params = FamilyParams::from_rt(r, t);
      const IntPolynomial f = build_p(params);
      const mpz_class d = closed_form_discriminant(params).value;
      for (u64 p : primes) {
        if (f.leading() % p == 0) continue;
        const FpPoly fp = FpPoly::reduce(f, p);
        CHECK(squarefree_mod_p(fp) == (d % p != 0));
      }
    }
  }
}

TEST_CASE("q_{6,10}: witnesses and bad primes") {
  const auto params = FamilyParams::from_rn(6, 10);
  const mpz_class d = closed_form_discriminant(params).value;
  CHECK(d == mpz_class("-19914854400000"));

  bool irreducible_found = false;
  for (u64 p : primes_up_to(149)) {
    const auto res = dedekind_cycle_type(params, p, d);
    if (res.ok() && res.pattern.is({6})) irreducible_found = true;
  }
  CHECK(irreducible_found);

  const auto five = dedekind_cycle_type(params, 13, d);
  REQUIRE(five.ok());
  CHECK(five.pattern.is({1, 5}));

  for (u64 p : primes_up_to(10000)) {
    const auto res = dedekind_cycle_type(params, p, d);
    if (res.ok()) CHECK_FALSE(res.pattern.is({2, 4}));
  }

  CHECK(dedekind_cycle_type(params, 5, d).status == CycleTypeStatus::DividesDiscriminant);
  CHECK(dedekind_cycle_type(params, 7, d).status == CycleTypeStatus::LeadingVanishes);
  CHECK(dedekind_cycle_type(params, 2, d).status != CycleTypeStatus::Certified);
  // Without the discriminant supplied the verdict is the same.
  CHECK(dedekind_cycle_type(params, 5).status == CycleTypeStatus::DividesDiscriminant);
  CHECK(dedekind_cycle_type(params, 13).pattern == five.pattern);
}

TEST_CASE("Dedekind pattern degrees sum to r") {
  const auto params = FamilyParams::from_rt(7, 1234);
  for (u64 p : primes_up_to(500)) {
    const auto res = dedekind_cycle_type(params, p);
    if (!res.ok()) continue;
    int sum = 0;
    for (int d : res.pattern.degrees) sum += d;
    CHECK(sum == 7);
  }
}
