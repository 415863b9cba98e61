#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace picsem {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

/// Oracle comparisons backing the `validate` subcommand. Self-contained:
/// no input data, no network.

/// |mutual_information_bruteforce - mutual_information_z| <= 1e-9 bits over
/// N in 1..30, P_i in {0.05..0.95 step 0.05}, p1 in {0.1..0.9 step 0.1}.
CheckResult check_z_equivalence();

/// |capacity_bruteforce - capacity_closed_form| <= 1e-6 bit/s over the same
/// (N, P_i) grid at tau = 0.02 s.
CheckResult check_capacity_bruteforce();

/// Closed-form p1* vs grid-search argmax (step 1e-6) within 1e-4 for
/// mu in {0, 0.01, .., 0.99}, and |dI/dp1| at p1* <= 1e-8 for mu in (0,1).
CheckResult check_optimal_input();

/// Perfect-absorption simulation vs the first-passage oracle: P_i(20 ms)
/// within 3 standard errors at 1e5 trials, dt = 1e-6 s, plus a band check
/// over the 200-point grid (>= 99% of points within 3 standard errors).
CheckResult check_first_passage(uint64_t seed, int threads);

/// Perfect absorption with k_d = 2e4: long-horizon eventual P_i within
/// 3 standard errors of the exponential-killing oracle.
CheckResult check_degradation_limit(uint64_t seed, int threads);

std::vector<CheckResult> run_all_validations(uint64_t seed, int threads);

} // namespace picsem
