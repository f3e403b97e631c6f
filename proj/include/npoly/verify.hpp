#ifndef NPOLY_VERIFY_HPP
#define NPOLY_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "npoly/lfunction.hpp"
#include "npoly/rational.hpp"
#include "npoly/rng.hpp"

namespace npoly::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;
    bool all_pass() const;
};

// Parameterized checks, shared between the CLI `verify` suites and the
// acceptance runner (which pins the spec parameters).
CheckResult polygon_algebra(std::uint64_t seed, int reps);
CheckResult hodge_product_identity(std::uint64_t seed, int pairs, long dmax);
CheckResult hodge_product_twisted(std::uint64_t seed, int pairs, long dmax, long smax);
CheckResult hp_closed_form(long dmax);
CheckResult poincare_sanity(std::uint64_t seed, int pairs, long dmax_pairs, long dmax_1d);
CheckResult dec_h_identity(std::uint64_t seed, int count, long dmax);
CheckResult lambda_equivalence(long smax);
CheckResult hs_consistency(long dmax, long smax);
CheckResult hs_prime_independence(long dmax, long smax, int primes_per_class);
CheckResult gnp_matching(std::uint64_t seed, int instances);
CheckResult gnp_coincidence(long dmax, long pmax);
CheckResult gnp_convergence(long d, long dp, long pmax, long tail_from, const Rat& tail_bound);
CheckResult oracle_lower_bound(std::uint64_t seed, const std::vector<long>& primes, int samples,
                               long dtot_max, long long budget);
CheckResult oracle_attains_hodge(std::uint64_t seed, long p, long d, long dp, int samples,
                                 long long budget);
CheckResult kunneth_identity(std::uint64_t seed, const std::vector<long>& primes,
                             int samples_per_prime, long long budget);
CheckResult poisson_identity(std::uint64_t seed, const std::vector<long>& primes,
                             int samples_per_prime, long long budget);
CheckResult l_degree_checks(std::uint64_t seed, int samples, long long budget);

SuiteReport run_suite(const std::string& name, std::uint64_t seed, long long budget);
std::vector<std::string> suite_names();

// Samplers (seeded, deterministic); also used by the CLI limit-table.
LaurentPolynomial random_laurent_1d(Rng& rng, long p, long d, long dp);
Segment1D random_admissible_segment(Rng& rng, long p, long dtot_max);
long next_prime_in_class(long start, long s, long nu);

}  // namespace npoly::verify

#endif
