#include "truncgal/classify.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "truncgal/disc.hpp"

namespace truncgal {

namespace {

constexpr std::string_view kNoIrreducibilityWitness = "no_irreducibility_witness";
constexpr std::string_view kNoHajirCertificate = "no_hajir_certificate";
constexpr std::string_view kNoCyclePair = "no_cycle_pair";
constexpr std::string_view kNoFiveCycle = "no_five_cycle";
constexpr std::string_view kP3BeyondDefaultBound = "p3_beyond_default_bound";
constexpr std::string_view kNo24Prefix = "no_24_pattern_up_to:";

bool has_pure(const std::vector<PureCycle>& cycles, int length) {
  return std::any_of(cycles.begin(), cycles.end(), [&](const PureCycle& c) { return c.length == length; });
}

// Largest prime q > r/2 available as a pure cycle, if any.
std::optional<int> prime_cycle_above_half(const std::vector<PureCycle>& cycles, int r) {
  std::optional<int> best;
  for (const auto& c : cycles) {
    if (2 * c.length > r && is_prime(static_cast<u64>(c.length))) best = std::max(best.value_or(0), c.length);
  }
  return best;
}

std::optional<IrreducibilityWitness> scan_irreducible(const FamilyParams& params, u64 bound) {
  for (u64 p : primes_up_to(bound)) {
    const FpPoly f = reduce_family_mod_p(params, Form::P, p);
    if (f.degree() == params.r() && irreducible_mod_p(f)) return IrreducibilityWitness{p, Form::P};
  }
  return std::nullopt;
}

DiscriminantEvidence discriminant_evidence(const FamilyParams& params) {
  DiscriminantValue d = closed_form_discriminant(params);
  return {d.value, is_square(d.value)};
}

GaloisVerdict start_verdict(const FamilyParams& params) {
  GaloisVerdict v;
  v.r = params.r();
  v.t = params.t();
  v.n = params.n();
  return v;
}

HajirEvidence to_evidence(const HajirCertificate& c) { return {c.q, c.p, c.e, c.side, c.edge}; }

}  // namespace

std::string_view to_string(GroupVerdict v) {
  switch (v) {
    case GroupVerdict::SymmetricCertified: return "SYMMETRIC_CERTIFIED";
    case GroupVerdict::AlternatingOrSymmetric: return "ALTERNATING_OR_SYMMETRIC";
    case GroupVerdict::Pgl25Compatible: return "PGL25_COMPATIBLE";
    case GroupVerdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

GroupVerdict parse_verdict(std::string_view name) {
  for (auto v : {GroupVerdict::SymmetricCertified, GroupVerdict::AlternatingOrSymmetric,
                 GroupVerdict::Pgl25Compatible, GroupVerdict::Inconclusive}) {
    if (to_string(v) == name) return v;
  }
  throw std::invalid_argument("unknown verdict: " + std::string(name));
}

std::string_view to_string(CycleRole role) {
  switch (role) {
    case CycleRole::QCycle: return "q_cycle";
    case CycleRole::TwoCycle: return "two_cycle";
    case CycleRole::ThreeCycle: return "three_cycle";
    case CycleRole::FiveCycle: return "five_cycle";
    case CycleRole::TwoFourElement: return "two_four_element";
  }
  return "?";
}

CycleRole parse_cycle_role(std::string_view name) {
  for (auto r : {CycleRole::QCycle, CycleRole::TwoCycle, CycleRole::ThreeCycle, CycleRole::FiveCycle,
                 CycleRole::TwoFourElement}) {
    if (to_string(r) == name) return r;
  }
  throw std::invalid_argument("unknown cycle role: " + std::string(name));
}

bool GaloisVerdict::has_flag(std::string_view name) const {
  return std::any_of(evidence.begin(), evidence.end(), [&](const Evidence& ev) {
    const Flag* f = std::get_if<Flag>(&ev);
    return f && f->name == name;
  });
}

std::vector<PureCycle> power_reduce_cycle_evidence(const FactorizationPattern& pattern, int r) {
  std::vector<PureCycle> out;
  if (!pattern.squarefree) return out;
  int sum = 0;
  long order = 1;
  for (int d : pattern.degrees) {
    sum += d;
    order = std::lcm(order, static_cast<long>(d));
  }
  if (sum != r) throw std::invalid_argument("power_reduce_cycle_evidence: pattern degree mismatch");
  for (long m = 1; m <= order; ++m) {
    int moving = 0;
    int length = 0;
    for (int d : pattern.degrees) {
      const long g = std::gcd(static_cast<long>(d), m);
      const int piece = static_cast<int>(d / g);
      if (piece > 1) {
        moving += static_cast<int>(g);
        length = piece;
      }
    }
    if (moving == 1 && !has_pure(out, length)) out.push_back({length, static_cast<int>(m)});
  }
  std::sort(out.begin(), out.end(), [](const PureCycle& a, const PureCycle& b) { return a.length < b.length; });
  return out;
}

GaloisVerdict certify_symmetric(const FamilyParams& params, const SearchBounds& bounds) {
  const int r = params.r();
  if (r < 2) throw std::invalid_argument("certify_symmetric: need r >= 2");
  GaloisVerdict v = start_verdict(params);

  const auto irreducible = scan_irreducible(params, bounds.prime_bound);
  if (!irreducible) {
    v.evidence.push_back(Flag{std::string(kNoIrreducibilityWitness)});
    return v;
  }
  v.evidence.push_back(*irreducible);

  const DiscriminantEvidence disc = discriminant_evidence(params);
  v.evidence.push_back(disc);

  if (find_q_prime(r)) {
    const HajirOutcome hajir = find_hajir_certificate(params, bounds.hajir_bound);
    if (hajir.certificate) {
      v.evidence.push_back(to_evidence(*hajir.certificate));
      v.group = disc.square ? GroupVerdict::AlternatingOrSymmetric : GroupVerdict::SymmetricCertified;
      return v;
    }
    v.evidence.push_back(Flag{std::string(kNoHajirCertificate)});
  }

  std::optional<CycleTypeWitness> q_cycle, two_cycle, three_cycle;
  for (u64 p : primes_up_to(bounds.prime_bound)) {
    const CycleTypeResult ct = dedekind_cycle_type(params, p, disc.value);
    if (!ct.ok()) continue;
    const auto pure = power_reduce_cycle_evidence(ct.pattern, r);
    if (!q_cycle && prime_cycle_above_half(pure, r)) q_cycle = CycleTypeWitness{CycleRole::QCycle, ct.pattern, pure};
    if (!two_cycle && has_pure(pure, 2)) two_cycle = CycleTypeWitness{CycleRole::TwoCycle, ct.pattern, pure};
    if (!three_cycle && has_pure(pure, 3)) three_cycle = CycleTypeWitness{CycleRole::ThreeCycle, ct.pattern, pure};
    if (q_cycle && two_cycle) {
      if (disc.square) throw std::logic_error("certify_symmetric: transposition found with square discriminant");
      v.evidence.push_back(*q_cycle);
      v.evidence.push_back(*two_cycle);
      v.group = GroupVerdict::SymmetricCertified;
      return v;
    }
    if (q_cycle && three_cycle) {
      v.evidence.push_back(*q_cycle);
      v.evidence.push_back(*three_cycle);
      v.group = disc.square ? GroupVerdict::AlternatingOrSymmetric : GroupVerdict::SymmetricCertified;
      return v;
    }
  }
  v.evidence.push_back(Flag{std::string(kNoCyclePair)});
  return v;
}

bool pgl25_excludes_24(const FactorizationPattern& pattern) { return pattern.is({2, 4}); }

GaloisVerdict sextic_pipeline(i64 t, const SexticBounds& bounds) {
  const FamilyParams params = FamilyParams::from_rt(6, t);
  GaloisVerdict v = start_verdict(params);

  const auto irreducible = scan_irreducible(params, bounds.p1_max);
  if (!irreducible) {
    v.evidence.push_back(Flag{std::string(kNoIrreducibilityWitness)});
    return v;
  }
  v.evidence.push_back(*irreducible);

  const DiscriminantEvidence disc = discriminant_evidence(params);
  v.evidence.push_back(disc);
  if (disc.square) return v;  // unreachable for r = 6: the discriminant is negative

  std::optional<CycleTypeWitness> five;
  for (u64 p : primes_up_to(bounds.p2_max)) {
    const CycleTypeResult ct = dedekind_cycle_type(params, p, disc.value);
    if (ct.ok() && ct.pattern.is({1, 5})) {
      five = CycleTypeWitness{CycleRole::FiveCycle, ct.pattern, power_reduce_cycle_evidence(ct.pattern, 6)};
      break;
    }
  }
  if (!five) {
    v.evidence.push_back(Flag{std::string(kNoFiveCycle)});
    return v;
  }
  v.evidence.push_back(*five);

  const u64 limit = std::max(bounds.p3_max, bounds.extended_max);
  for (u64 p : primes_up_to(limit)) {
    const CycleTypeResult ct = dedekind_cycle_type(params, p, disc.value);
    if (ct.ok() && pgl25_excludes_24(ct.pattern)) {
      v.evidence.push_back(
          CycleTypeWitness{CycleRole::TwoFourElement, ct.pattern, power_reduce_cycle_evidence(ct.pattern, 6)});
      if (p > bounds.p3_max) v.evidence.push_back(Flag{std::string(kP3BeyondDefaultBound)});
      v.group = GroupVerdict::SymmetricCertified;
      return v;
    }
  }
  v.evidence.push_back(Flag{std::string(kNo24Prefix) + std::to_string(limit)});
  v.group = GroupVerdict::Pgl25Compatible;
  return v;
}

GaloisVerdict classify(const FamilyParams& params, const ClassifyConfig& config) {
  if (params.r() == 6) return sextic_pipeline(params.t(), config.sextic);
  return certify_symmetric(params, config.general);
}

bool replay_verdict(const GaloisVerdict& verdict) {
  const FamilyParams params = FamilyParams::from_rt(verdict.r, verdict.t);
  if (params.n() != verdict.n) return false;

  bool irreducible = false;
  std::optional<bool> square;
  bool hajir = false;
  std::vector<CycleTypeWitness> cycles;
  std::optional<u64> no24_limit;

  for (const auto& ev : verdict.evidence) {
    if (const auto* w = std::get_if<IrreducibilityWitness>(&ev)) {
      const FpPoly f = reduce_family_mod_p(params, w->form, w->prime);
      if (f.degree() != params.r() || !irreducible_mod_p(f)) return false;
      irreducible = true;
    } else if (const auto* d = std::get_if<DiscriminantEvidence>(&ev)) {
      if (!(discriminant_evidence(params) == *d)) return false;
      square = d->square;
    } else if (const auto* h = std::get_if<HajirEvidence>(&ev)) {
      HajirCertificate cert;
      cert.q = h->q;
      cert.p = h->p;
      cert.e = h->e;
      cert.side = h->side;
      cert.edge = h->edge;
      if (!verify_hajir_certificate(params, cert)) return false;
      hajir = true;
    } else if (const auto* c = std::get_if<CycleTypeWitness>(&ev)) {
      const CycleTypeResult ct = dedekind_cycle_type(params, c->pattern.prime);
      if (!ct.ok() || !(ct.pattern == c->pattern)) return false;
      if (power_reduce_cycle_evidence(ct.pattern, params.r()) != c->pure_cycles) return false;
      cycles.push_back(*c);
    } else if (const auto* f = std::get_if<Flag>(&ev)) {
      if (f->name.starts_with(kNo24Prefix)) no24_limit = std::stoull(f->name.substr(kNo24Prefix.size()));
    }
  }

  auto role_ok = [&](CycleRole role) {
    return std::any_of(cycles.begin(), cycles.end(), [&](const CycleTypeWitness& c) {
      if (c.role != role) return false;
      switch (role) {
        case CycleRole::QCycle: return prime_cycle_above_half(c.pure_cycles, params.r()).has_value();
        case CycleRole::TwoCycle: return has_pure(c.pure_cycles, 2);
        case CycleRole::ThreeCycle: return has_pure(c.pure_cycles, 3);
        case CycleRole::FiveCycle: return c.pattern.is({1, 5});
        case CycleRole::TwoFourElement: return pgl25_excludes_24(c.pattern);
      }
      return false;
    });
  };

  const bool pair_two = role_ok(CycleRole::QCycle) && role_ok(CycleRole::TwoCycle);
  const bool pair_three = role_ok(CycleRole::QCycle) && role_ok(CycleRole::ThreeCycle);
  const bool sextic = params.r() == 6 && role_ok(CycleRole::FiveCycle);

  switch (verdict.group) {
    case GroupVerdict::SymmetricCertified:
      return irreducible && square == false &&
             (hajir || pair_two || pair_three || (sextic && role_ok(CycleRole::TwoFourElement)));
    case GroupVerdict::AlternatingOrSymmetric:
      return irreducible && square == true && (hajir || pair_three);
    case GroupVerdict::Pgl25Compatible: {
      if (!(irreducible && square == false && sextic && no24_limit)) return false;
      if (role_ok(CycleRole::TwoFourElement)) return false;
      const mpz_class disc = closed_form_discriminant(params).value;
      for (u64 p : primes_up_to(*no24_limit)) {
        const CycleTypeResult ct = dedekind_cycle_type(params, p, disc);
        if (ct.ok() && pgl25_excludes_24(ct.pattern)) return false;
      }
      return true;
    }
    case GroupVerdict::Inconclusive:
      return true;
  }
  return false;
}

}  // namespace truncgal
