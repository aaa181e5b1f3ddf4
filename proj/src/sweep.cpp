#include "truncgal/sweep.hpp"

#include <omp.h>

#include "truncgal/disc.hpp"

namespace truncgal {

namespace {

bool is_square_u64(i64 x) {
  if (x < 0) return false;
  mpz_class v = static_cast<long>(x);
  return mpz_perfect_square_p(v.get_mpz_t()) != 0;
}

// x = a u^2 for some a in {1, 2, 3, 6}.
bool square_times_divisor_of_six(i64 x) {
  for (i64 a : {1, 2, 3, 6}) {
    if (x % a == 0 && is_square_u64(x / a)) return true;
  }
  return false;
}

bool is_exceptional(i64 t) { return square_times_divisor_of_six(t + 5) && square_times_divisor_of_six(t + 3); }

std::vector<FactorizationPattern> census(const FamilyParams& params, const std::vector<u64>& primes, bool parallel) {
  const mpz_class disc = params.r() >= 2 ? closed_form_discriminant(params).value : mpz_class(1);
  const auto count = static_cast<i64>(primes.size());
  std::vector<CycleTypeResult> slots(primes.size());
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
  for (i64 i = 0; i < count; ++i) {
    slots[static_cast<std::size_t>(i)] = dedekind_cycle_type(params, primes[static_cast<std::size_t>(i)], disc);
  }
  std::vector<FactorizationPattern> out;
  for (const auto& s : slots) {
    if (s.ok()) out.push_back(s.pattern);
  }
  return out;
}

}  // namespace

void set_workers(int workers) {
  if (workers > 0) omp_set_num_threads(workers);
}

std::vector<GaloisVerdict> classify_range_serial(int r, i64 t_from, i64 t_to, const ClassifyConfig& config) {
  std::vector<GaloisVerdict> out;
  for (i64 t = t_from; t <= t_to; ++t) out.push_back(classify(FamilyParams::from_rt(r, t), config));
  return out;
}

std::vector<GaloisVerdict> classify_range_parallel(int r, i64 t_from, i64 t_to, const ClassifyConfig& config) {
  if (t_from > t_to) return {};
  const i64 count = t_to - t_from + 1;
  std::vector<GaloisVerdict> out(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic, 4)
  for (i64 i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = classify(FamilyParams::from_rt(r, t_from + i), config);
  }
  return out;
}

std::vector<i64> brute_force_exceptional_serial(i64 limit) {
  std::vector<i64> out;
  for (i64 t = 1; t <= limit; ++t) {
    if (is_exceptional(t)) out.push_back(t);
  }
  return out;
}

std::vector<i64> brute_force_exceptional_parallel(i64 limit) {
  if (limit < 1) return {};
  std::vector<char> hit(static_cast<std::size_t>(limit) + 1, 0);
#pragma omp parallel for schedule(static)
  for (i64 t = 1; t <= limit; ++t) hit[static_cast<std::size_t>(t)] = is_exceptional(t);
  std::vector<i64> out;
  for (i64 t = 1; t <= limit; ++t) {
    if (hit[static_cast<std::size_t>(t)]) out.push_back(t);
  }
  return out;
}

std::vector<FactorizationPattern> cycle_type_census_serial(const FamilyParams& params, u64 prime_bound) {
  return census(params, primes_up_to(prime_bound), false);
}

std::vector<FactorizationPattern> cycle_type_census_parallel(const FamilyParams& params, u64 prime_bound) {
  return census(params, primes_up_to(prime_bound), true);
}

}  // namespace truncgal
