#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "truncgal/modp.hpp"
#include "truncgal/newton.hpp"

namespace truncgal {

enum class GroupVerdict {
  SymmetricCertified,
  // Group contains A_r (square discriminant, so it is A_r itself).
  AlternatingOrSymmetric,
  // r = 6 only: irreducible, non-square discriminant, a 5-cycle, and no
  // (2,4)-element within the search bounds. Never a claim that G = PGL2(5).
  Pgl25Compatible,
  Inconclusive,
};

std::string_view to_string(GroupVerdict v);
GroupVerdict parse_verdict(std::string_view name);

struct IrreducibilityWitness {
  u64 prime = 0;
  Form form = Form::P;
  friend bool operator==(const IrreducibilityWitness&, const IrreducibilityWitness&) = default;
};

struct DiscriminantEvidence {
  mpz_class value;
  bool square = false;
  friend bool operator==(const DiscriminantEvidence&, const DiscriminantEvidence&) = default;
};

struct HajirEvidence {
  int q = 0;
  mpz_class p;
  unsigned e = 0;
  HajirSide side = HajirSide::Lower;
  NewtonEdge edge;
  friend bool operator==(const HajirEvidence&, const HajirEvidence&) = default;
};

// A pure cycle obtained as a power of a Frobenius element.
struct PureCycle {
  int length = 0;
  // Smallest exponent m with sigma^m a pure `length`-cycle.
  int power = 0;
  friend bool operator==(const PureCycle&, const PureCycle&) = default;
};

enum class CycleRole { QCycle, TwoCycle, ThreeCycle, FiveCycle, TwoFourElement };
std::string_view to_string(CycleRole role);
CycleRole parse_cycle_role(std::string_view name);

struct CycleTypeWitness {
  CycleRole role = CycleRole::QCycle;
  FactorizationPattern pattern;
  std::vector<PureCycle> pure_cycles;
  friend bool operator==(const CycleTypeWitness&, const CycleTypeWitness&) = default;
};

struct Flag {
  std::string name;
  friend bool operator==(const Flag&, const Flag&) = default;
};

using Evidence = std::variant<IrreducibilityWitness, DiscriminantEvidence, HajirEvidence, CycleTypeWitness, Flag>;

struct GaloisVerdict {
  GroupVerdict group = GroupVerdict::Inconclusive;
  int r = 0;
  i64 t = 0;
  i64 n = 0;
  std::vector<Evidence> evidence;

  bool has_flag(std::string_view name) const;
  template <class T>
  std::vector<T> records() const {
    std::vector<T> out;
    for (const auto& ev : evidence) {
      if (const T* rec = std::get_if<T>(&ev)) out.push_back(*rec);
    }
    return out;
  }
  friend bool operator==(const GaloisVerdict&, const GaloisVerdict&) = default;
};

struct SearchBounds {
  u64 prime_bound = 10'000;
  // Upper limit on the prime p in Hajir certificates.
  mpz_class hajir_bound = 1'000'000'000;
};

// Certification for general r >= 2: irreducibility witness,
// discriminant squareness, then a Newton-polygon certificate when a prime
// q in (r/2, r-2) exists, otherwise (or failing that) a q-cycle plus a 2-cycle
// or 3-cycle read from Dedekind patterns. Failure of any leg within the bounds
// gives Inconclusive.
GaloisVerdict certify_symmetric(const FamilyParams& params, const SearchBounds& bounds = {});

// Pure cycle lengths available as powers of an element of the given type.
// E.g. {2,3} -> 2-cycle (cube) and 3-cycle (square); {1,5} -> 5-cycle.
std::vector<PureCycle> power_reduce_cycle_evidence(const FactorizationPattern& pattern, int r);

struct SexticBounds {
  u64 p1_max = 149;
  u64 p2_max = 101;
  u64 p3_max = 109;
  // Continue the (2,4) search this far before settling on Pgl25Compatible.
  u64 extended_max = 10'000;
};

// The four-check r = 6 verification on p_{6,t}.
GaloisVerdict sextic_pipeline(i64 t, const SexticBounds& bounds = {});

// The pattern {2,4}, present in S6 but not in PGL2(5).
bool pgl25_excludes_24(const FactorizationPattern& pattern);

struct ClassifyConfig {
  SearchBounds general;
  SexticBounds sextic;
};

// sextic_pipeline for r = 6, certify_symmetric otherwise.
GaloisVerdict classify(const FamilyParams& params, const ClassifyConfig& config = {});

// Re-runs every evidence record from raw inputs and re-derives the verdict.
bool replay_verdict(const GaloisVerdict& verdict);

}  // namespace truncgal
