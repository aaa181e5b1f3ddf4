#pragma once

// Batch kernels. Each parallel kernel has a serial twin that is the reference
// for tests and the baseline for bench/. Parallel results are returned in the
// same order as the serial ones.

#include <vector>

#include "truncgal/classify.hpp"

namespace truncgal {

// workers <= 0 leaves the OpenMP default.
void set_workers(int workers);

// Verdicts for t = t_from .. t_to inclusive (empty if t_from > t_to).
std::vector<GaloisVerdict> classify_range_serial(int r, i64 t_from, i64 t_to, const ClassifyConfig& config);
std::vector<GaloisVerdict> classify_range_parallel(int r, i64 t_from, i64 t_to, const ClassifyConfig& config);

// Direct scan of 1 <= t <= limit for t + 5 = a u^2, t + 3 = b v^2 with a, b | 6.
std::vector<i64> brute_force_exceptional_serial(i64 limit);
std::vector<i64> brute_force_exceptional_parallel(i64 limit);

// Dedekind patterns of the family member at every prime p <= prime_bound that
// keeps the degree and does not divide the discriminant, ascending in p.
std::vector<FactorizationPattern> cycle_type_census_serial(const FamilyParams& params, u64 prime_bound);
std::vector<FactorizationPattern> cycle_type_census_parallel(const FamilyParams& params, u64 prime_bound);

}  // namespace truncgal
