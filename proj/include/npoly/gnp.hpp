#ifndef NPOLY_GNP_HPP
#define NPOLY_GNP_HPP

#include <optional>
#include <vector>

#include "npoly/polygon.hpp"
#include "npoly/polytope.hpp"

namespace npoly {

// (i1, i2) with i = 1 + i1 + i2 such that the i smallest HP([-dp,d]) slopes
// are {0} u {j/d : j <= i1} u {j/dp : j <= i2}. Usually unique; ties like
// d = dp give several, and Y_i takes the minimum over all of them.
struct SlopeSplit {
    long i1 = 0;
    long i2 = 0;
};

// HP([-dp, d]): slopes 0, 1, 1/d .. (d-1)/d, 1/dp .. (dp-1)/dp
// (0, 1/d .. (d-1)/d when dp = 0).
ConvexPolygon hp_1d(long d, long dp);

std::vector<SlopeSplit> slope_splits(long d, long dp, long i);

// Exact min-cost perfect matching on a square matrix with forbidden edges
// (nullopt entries). Returns nullopt when no feasible matching exists.
std::optional<long long> assignment_min_cost(
    const std::vector<std::vector<std::optional<long long>>>& cost);

// Y_i = min over sigma in S_i of sum ceil(w(p j - sigma(j))), indices running
// over {-i2, ..., i1}; minimum over all valid splits.
long long y_i(long d, long dp, long p, long i);

// Permutation-enumeration oracle for y_i, independent of the matching solver.
long long y_i_brute_force(long d, long dp, long p, long i);

std::vector<long long> y_values(long d, long dp, long p);

// GNP([-dp, d], p): vertices (0,0) and (i, Y_i/(p-1)); checks convexity and
// dominance over HP([-dp, d]) with shared endpoints.
ConvexPolygon gnp_1d(long d, long dp, long p);

// Product of the per-axis generic Newton polygons: the lower bound for
// GNP(Delta, p) on a direct sum.
ConvexPolygon gnp_product(const std::vector<Segment1D>& segments, long p);

struct ConvergenceRow {
    long p = 0;
    Rat deviation;
    std::vector<long long> y;
};

// (p, max_deviation(GNP, HP)) for primes p <= p_max not dividing d or dp.
std::vector<ConvergenceRow> convergence_table(long d, long dp, long p_max);

bool is_prime(long n);

}  // namespace npoly

#endif
