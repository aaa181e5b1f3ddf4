#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "truncgal/pell.hpp"

using namespace truncgal;

namespace {

bool is_square(i64 x, i64 a) {
  if (x % a) return false;
  const i64 y = x / a;
  i64 s = static_cast<i64>(std::llround(std::sqrt(static_cast<double>(y))));
  while (s * s > y) --s;
  while ((s + 1) * (s + 1) <= y) ++s;
  return s * s == y;
}

// Direct scan; independent of the orbit machinery.
std::vector<i64> brute(i64 limit) {
  std::vector<i64> out;
  for (i64 t = 1; t <= limit; ++t) {
    bool a_ok = false, b_ok = false;
    for (i64 d : {1, 2, 3, 6}) {
      a_ok = a_ok || is_square(t + 5, d);
      b_ok = b_ok || is_square(t + 3, d);
    }
    if (a_ok && b_ok) out.push_back(t);
  }
  return out;
}

}  // namespace

TEST_CASE("QuadraticInteger arithmetic") {
  const QuadraticInteger a{3, 2, 2};
  CHECK(a.norm() == 1);
  const QuadraticInteger b = a * a;
  CHECK(b.x == 17);
  CHECK(b.y == 12);
  CHECK(b.norm() == 1);
  CHECK_THROWS((a * QuadraticInteger{1, 1, 3}));
}

TEST_CASE("orbit table") {
  const auto& orbits = pell_orbits();
  REQUIRE(orbits.size() == 6);
  std::set<std::pair<long, long>> pairs;
  for (const auto& o : orbits) pairs.insert({o.a, o.b});
  CHECK(pairs == std::set<std::pair<long, long>>{{1, 2}, {2, 1}, {2, 3}, {2, 6}, {3, 1}, {6, 1}});

  for (const auto& o : orbits) {
    CHECK(o.step.norm() == 1);
    mpz_class prev_u = 0;
    for (int m = 1; m <= 30; ++m) {
      const PellSolution s = o.solution(m);
      CHECK(s.m == m);
      CHECK(o.a * s.u * s.u - o.b * s.v * s.v == 2);
      CHECK(s.t == o.a * s.u * s.u - 5);
      CHECK(s.u > prev_u);
      CHECK(s.v > 0);
      prev_u = s.u;
    }
  }
}

TEST_CASE("first orbit elements") {
  for (const auto& o : pell_orbits()) {
    const PellSolution s = o.solution(1);
    if (o.a == 1 && o.b == 2) {
      CHECK(s.u == 2);
      CHECK(s.v == 1);
    }
    if (o.a == 2 && o.b == 6) {
      CHECK(s.u == 2);
      CHECK(s.v == 1);
    }
    if (o.a == 3 && o.b == 1) {
      CHECK(s.u == 1);
      CHECK(s.v == 1);
    }
  }
}

TEST_CASE("residue_obstruction partitions the 16 divisor pairs 9 / 1 / 6") {
  CHECK(residue_obstruction(1, 1) == ResidueClass::ObstructedMod4);
  CHECK(residue_obstruction(2, 2) == ResidueClass::Trivial22);
  CHECK(residue_obstruction(1, 2) == ResidueClass::Orbit);
  int obstructed = 0, trivial = 0, orbit = 0;
  for (long a : {1, 2, 3, 6}) {
    for (long b : {1, 2, 3, 6}) {
      const ResidueClass c = residue_obstruction(a, b);
      CHECK(c != ResidueClass::Unknown);
      if (c == ResidueClass::ObstructedMod3 || c == ResidueClass::ObstructedMod4) ++obstructed;
      if (c == ResidueClass::Trivial22) ++trivial;
      if (c == ResidueClass::Orbit) ++orbit;
      // Obstructed pairs have no small solutions.
      if (c == ResidueClass::ObstructedMod3 || c == ResidueClass::ObstructedMod4) {
        for (long u = 0; u <= 60; ++u)
          for (long v = 0; v <= 60; ++v) CHECK(a * u * u - b * v * v != 2);
      }
    }
  }
  CHECK(obstructed == 9);
  CHECK(trivial == 1);
  CHECK(orbit == 6);
  CHECK_THROWS_AS(residue_obstruction(5, 1), std::invalid_argument);
  CHECK_THROWS_AS(residue_obstruction(1, 4), std::invalid_argument);
  CHECK(to_string(ResidueClass::Trivial22) == "TRIVIAL_22");
}

TEST_CASE("enumerate_exceptional matches a direct scan") {
  const auto got = enumerate_exceptional(100);
  std::vector<i64> ts;
  for (const auto& e : got) {
    ts.push_back(e.t);
    CHECK_FALSE(e.witnesses.empty());
    for (const auto& w : e.witnesses) {
      CHECK(w.a * w.u * w.u == e.t + 5);
      CHECK(w.b * w.v * w.v == e.t + 3);
    }
  }
  CHECK(ts == brute(100));
  CHECK(ts == std::vector<i64>{1, 3, 13, 22, 45, 93, 95});

  std::vector<i64> big;
  for (const auto& e : enumerate_exceptional(200'000)) big.push_back(e.t);
  CHECK(big == brute(200'000));

  CHECK(enumerate_exceptional(0).empty());
  CHECK(enumerate_exceptional(1).size() == 1);
}

TEST_CASE("bounded_thue_search") {
  const auto s = bounded_thue_search(1, 1, 3, 2, 50);
  for (const auto& [u, v] : s) CHECK(u * u * u - v * v * v == 2);
  CHECK(bounded_thue_search(1, 1, 3, -4, 100).empty());
  // 27 - 8 = 19
  const auto t = bounded_thue_search(1, 1, 3, 19, 100);
  REQUIRE_FALSE(t.empty());
  CHECK(t.front() == std::pair<i64, i64>{3, 2});
  const auto w = bounded_thue_search(2, 1, 5, 1, 20);
  CHECK(std::find(w.begin(), w.end(), std::pair<i64, i64>{1, 1}) != w.end());
  CHECK_THROWS_AS(bounded_thue_search(1, 1, 2, 2, 10), std::invalid_argument);
}
