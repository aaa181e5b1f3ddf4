#include "truncgal/pell.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace truncgal {

namespace {

bool divides_six(long x) { return x == 1 || x == 2 || x == 3 || x == 6; }

bool solvable_mod(long a, long b, long m) {
  for (long u = 0; u < m; ++u) {
    for (long v = 0; v < m; ++v) {
      if ((((a * u * u - b * v * v - 2) % m) + m) % m == 0) return true;
    }
  }
  return false;
}

QuadraticInteger qi(long x, long y, long d) { return {x, y, d}; }

}  // namespace

QuadraticInteger QuadraticInteger::operator*(const QuadraticInteger& o) const {
  if (d != o.d) throw std::invalid_argument("QuadraticInteger: mismatched radicands");
  return {x * o.x + d * y * o.y, x * o.y + y * o.x, d};
}

PellSolution PellOrbit::solution(int m) const {
  if (m < 1) throw std::invalid_argument("PellOrbit::solution: m >= 1");
  QuadraticInteger z = initial;
  for (int i = 1; i < m; ++i) z = z * step;
  PellSolution s;
  s.m = m;
  s.u = extraction.rational_is_u ? z.x : z.y;
  s.v = extraction.rational_is_u ? z.y : z.x;
  if (extraction.double_u) s.u *= 2;
  if (extraction.double_v) s.v *= 2;
  s.t = a * s.u * s.u - 5;
  return s;
}

const std::vector<PellOrbit>& pell_orbits() {
  static const std::vector<PellOrbit> orbits = {
      // (1+sqrt2)^(2m-1) = v + sqrt2 u', u = 2u'
      {1, 2, qi(1, 1, 2), qi(3, 2, 2), {false, true, false}, "u = 2u' where (1+sqrt2)^(2m-1) = v + sqrt2 u'"},
      // (1+sqrt2)^(2m) = u + sqrt2 v', v = 2v'
      {2, 1, qi(3, 2, 2), qi(3, 2, 2), {true, false, true}, "v = 2v' where (1+sqrt2)^(2m) = u + sqrt2 v'"},
      // (5+2sqrt6)^m = u + sqrt6 v', v = 2v'
      {2, 3, qi(5, 2, 6), qi(5, 2, 6), {true, false, true}, "v = 2v' where (5+2sqrt6)^m = u + sqrt6 v'"},
      // (2+sqrt3)^m = u + sqrt3 v
      {2, 6, qi(2, 1, 3), qi(2, 1, 3), {true, false, false}, "(2+sqrt3)^m = u + sqrt3 v"},
      // (1+sqrt3)(2+sqrt3)^(m-1) = v + sqrt3 u
      {3, 1, qi(1, 1, 3), qi(2, 1, 3), {false, false, false}, "(1+sqrt3)(2+sqrt3)^(m-1) = v + sqrt3 u"},
      // (2+sqrt6)(5+2sqrt6)^(m-1) = v + sqrt6 u
      {6, 1, qi(2, 1, 6), qi(5, 2, 6), {false, false, false}, "(2+sqrt6)(5+2sqrt6)^(m-1) = v + sqrt6 u"},
  };
  return orbits;
}

std::string to_string(ResidueClass c) {
  switch (c) {
    case ResidueClass::ObstructedMod3: return "OBSTRUCTED_MOD_3";
    case ResidueClass::ObstructedMod4: return "OBSTRUCTED_MOD_4";
    case ResidueClass::Trivial22: return "TRIVIAL_22";
    case ResidueClass::Orbit: return "ORBIT";
    case ResidueClass::Unknown: return "UNKNOWN";
  }
  return "?";
}

ResidueClass residue_obstruction(long a, long b) {
  if (!divides_six(a) || !divides_six(b)) throw std::invalid_argument("residue_obstruction: a and b must divide 6");
  if (a == 2 && b == 2) return ResidueClass::Trivial22;
  for (const auto& o : pell_orbits()) {
    if (o.a == a && o.b == b) return ResidueClass::Orbit;
  }
  if (!solvable_mod(a, b, 3)) return ResidueClass::ObstructedMod3;
  if (!solvable_mod(a, b, 4)) return ResidueClass::ObstructedMod4;
  return ResidueClass::Unknown;
}

std::vector<ExceptionalValue> enumerate_exceptional(i64 limit) {
  std::map<i64, ExceptionalValue> found;
  const mpz_class cap = static_cast<long>(limit);
  for (const auto& orbit : pell_orbits()) {
    QuadraticInteger z = orbit.initial;
    for (int m = 1;; ++m, z = z * orbit.step) {
      mpz_class u = orbit.extraction.rational_is_u ? z.x : z.y;
      mpz_class v = orbit.extraction.rational_is_u ? z.y : z.x;
      if (orbit.extraction.double_u) u *= 2;
      if (orbit.extraction.double_v) v *= 2;
      const mpz_class t = orbit.a * u * u - 5;
      if (t > cap) break;
      if (t < 1) continue;
      if (orbit.b * v * v != t + 3) throw std::logic_error("enumerate_exceptional: orbit violates t + 3 = b v^2");
      auto& entry = found[t.get_si()];
      entry.t = t.get_si();
      entry.witnesses.push_back({orbit.a, orbit.b, m, u, v});
    }
  }
  std::vector<ExceptionalValue> out;
  out.reserve(found.size());
  for (auto& [t, value] : found) out.push_back(std::move(value));
  return out;
}

std::vector<std::pair<i64, i64>> bounded_thue_search(long a, long b, unsigned q, const mpz_class& rhs, i64 bound) {
  if (q < 3) throw std::invalid_argument("bounded_thue_search: exponent must be >= 3");
  if (a <= 0 || b <= 0) throw std::invalid_argument("bounded_thue_search: a, b must be positive");
  std::vector<std::pair<i64, i64>> out;
  if (sgn(rhs) <= 0 || bound < 1) return out;
  mpz_class uq, rest, v;
  for (i64 u = 1; u <= bound; ++u) {
    mpz_ui_pow_ui(uq.get_mpz_t(), static_cast<unsigned long>(u), q);
    rest = a * uq - rhs;
    if (sgn(rest) <= 0) continue;
    if (!mpz_divisible_ui_p(rest.get_mpz_t(), static_cast<unsigned long>(b))) continue;
    mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), static_cast<unsigned long>(b));
    if (mpz_root(v.get_mpz_t(), rest.get_mpz_t(), q) != 0 && v <= bound) out.emplace_back(u, v.get_si());
  }
  return out;
}

}  // namespace truncgal
