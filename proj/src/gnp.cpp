#include "npoly/gnp.hpp"

#include <algorithm>
#include <climits>
#include <functional>

#include "npoly/errors.hpp"

namespace npoly {

namespace {

constexpr long long kInf = LLONG_MAX / 64;

// ceil(w(n)) on [-dp, d]; nullopt when n is outside the cone.
std::optional<long long> ceil_weight(long d, long dp, long long n) {
    if (n == 0) return 0;
    if (n > 0) {
        if (d == 0) return std::nullopt;
        return (n + d - 1) / d;
    }
    if (dp == 0) return std::nullopt;
    return (-n + dp - 1) / dp;
}

// Kuhn's matching on the feasibility graph.
bool has_perfect_matching(const std::vector<std::vector<std::optional<long long>>>& cost) {
    const int n = static_cast<int>(cost.size());
    std::vector<int> match_col(n, -1);
    std::vector<char> seen;
    std::function<bool(int)> try_row = [&](int r) {
        for (int c = 0; c < n; ++c) {
            if (!cost[r][c] || seen[c]) continue;
            seen[c] = 1;
            if (match_col[c] < 0 || try_row(match_col[c])) {
                match_col[c] = r;
                return true;
            }
        }
        return false;
    };
    for (int r = 0; r < n; ++r) {
        seen.assign(n, 0);
        if (!try_row(r)) return false;
    }
    return true;
}

}  // namespace

ConvexPolygon hp_1d(long d, long dp) {
    if (d < 0 || dp < 0 || (d == 0 && dp == 0)) throw MathError("hp_1d: bad segment");
    std::vector<Rat> slopes;
    if (d == 0) {
        for (long j = 0; j < dp; ++j) slopes.emplace_back(j, dp);
    } else if (dp == 0) {
        for (long j = 0; j < d; ++j) slopes.emplace_back(j, d);
    } else {
        slopes.emplace_back(0);
        slopes.emplace_back(1);
        for (long j = 1; j < d; ++j) slopes.emplace_back(j, d);
        for (long j = 1; j < dp; ++j) slopes.emplace_back(j, dp);
    }
    return ConvexPolygon::from_slopes(std::move(slopes));
}

std::vector<SlopeSplit> slope_splits(long d, long dp, long i) {
    if (i < 1 || i > d + dp) throw MathError("slope_splits: i out of range");
    auto hp = hp_1d(d, dp).slopes();
    std::vector<Rat> target(hp.begin(), hp.begin() + i);
    std::vector<SlopeSplit> out;
    const long i2_max = dp == 0 ? 0 : dp - 1;
    for (long i1 = 0; i1 <= std::min(d, i - 1); ++i1) {
        const long i2 = i - 1 - i1;
        if (i2 < 0 || i2 > i2_max) continue;
        std::vector<Rat> cand{Rat(0)};
        for (long j = 1; j <= i1; ++j) cand.emplace_back(j, d);
        for (long j = 1; j <= i2; ++j) cand.emplace_back(j, dp);
        std::sort(cand.begin(), cand.end());
        if (cand == target) out.push_back({i1, i2});
    }
    return out;
}

std::optional<long long> assignment_min_cost(
    const std::vector<std::vector<std::optional<long long>>>& cost) {
    const int n = static_cast<int>(cost.size());
    if (n == 0) return 0;
    if (!has_perfect_matching(cost)) return std::nullopt;
    // Hungarian algorithm with potentials.
    std::vector<long long> u(n + 1, 0), v(n + 1, 0);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);
    auto a = [&](int i, int j) -> long long {
        const auto& c = cost[i - 1][j - 1];
        return c ? *c : kInf;
    };
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<long long> minv(n + 1, kInf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            int i0 = p[j0], j1 = -1;
            long long delta = kInf;
            for (int j = 1; j <= n; ++j)
                if (!used[j]) {
                    long long cur = a(i0, j) - u[i0] - v[j];
                    if (cur < minv[j]) {
                        minv[j] = cur;
                        way[j] = j0;
                    }
                    if (minv[j] < delta) {
                        delta = minv[j];
                        j1 = j;
                    }
                }
            for (int j = 0; j <= n; ++j)
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }
    long long total = 0;
    for (int j = 1; j <= n; ++j) {
        if (!cost[p[j] - 1][j - 1]) return std::nullopt;  // cannot happen after matching check
        total += *cost[p[j] - 1][j - 1];
    }
    return total;
}

namespace {

std::vector<std::vector<std::optional<long long>>> split_cost_matrix(long d, long dp, long p,
                                                                     const SlopeSplit& sp) {
    const long i = 1 + sp.i1 + sp.i2;
    std::vector<std::vector<std::optional<long long>>> cost(
        i, std::vector<std::optional<long long>>(i));
    for (long r = 0; r < i; ++r)
        for (long c = 0; c < i; ++c) {
            const long long j = r - sp.i2, k = c - sp.i2;
            cost[r][c] = ceil_weight(d, dp, p * j - k);
        }
    return cost;
}

}  // namespace

long long y_i(long d, long dp, long p, long i) {
    // the Y_i description holds for odd p; at p = 2 it can emit non-convex data
    if (p < 3 || !is_prime(p)) throw MathError("y_i: p must be an odd prime");
    if (d > 0 && d % p == 0) throw MathError("y_i: p divides d");
    if (dp > 0 && dp % p == 0) throw MathError("y_i: p divides d'");
    std::optional<long long> best;
    for (const auto& sp : slope_splits(d, dp, i)) {
        auto val = assignment_min_cost(split_cost_matrix(d, dp, p, sp));
        if (val && (!best || *val < *best)) best = val;
    }
    if (!best) throw MathError("y_i: infeasible split");
    return *best;
}

long long y_i_brute_force(long d, long dp, long p, long i) {
    std::optional<long long> best;
    for (const auto& sp : slope_splits(d, dp, i)) {
        auto cost = split_cost_matrix(d, dp, p, sp);
        const int n = static_cast<int>(cost.size());
        std::vector<int> perm(n);
        for (int k = 0; k < n; ++k) perm[k] = k;
        do {
            long long total = 0;
            bool ok = true;
            for (int r = 0; r < n && ok; ++r) {
                if (!cost[r][perm[r]])
                    ok = false;
                else
                    total += *cost[r][perm[r]];
            }
            if (ok && (!best || total < *best)) best = total;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    if (!best) throw MathError("y_i_brute_force: infeasible split");
    return *best;
}

std::vector<long long> y_values(long d, long dp, long p) {
    std::vector<long long> y;
    for (long i = 1; i <= d + dp; ++i) y.push_back(y_i(d, dp, p, i));
    return y;
}

ConvexPolygon gnp_1d(long d, long dp, long p) {
    const auto y = y_values(d, dp, p);
    std::vector<long long> diff;
    long long prev = 0;
    for (long long yi : y) {
        diff.push_back(yi - prev);
        prev = yi;
    }
    for (std::size_t i = 1; i < diff.size(); ++i)
        if (diff[i] < diff[i - 1]) throw MathError("gnp_1d: Y_i sequence is not convex");
    std::vector<Rat> slopes;
    for (long long s : diff) slopes.emplace_back(Int(s), Int(p - 1));
    ConvexPolygon gnp = ConvexPolygon::from_slopes(std::move(slopes));
    if (!dominates(gnp, hp_1d(d, dp)))
        throw MathError("gnp_1d: generic polygon does not dominate the Hodge polygon");
    return gnp;
}

ConvexPolygon gnp_product(const std::vector<Segment1D>& segments, long p) {
    if (segments.empty()) throw MathError("gnp_product: no segments");
    ConvexPolygon out = gnp_1d(segments[0].d, segments[0].dp, p);
    for (std::size_t i = 1; i < segments.size(); ++i)
        out = product(out, gnp_1d(segments[i].d, segments[i].dp, p));
    return out;
}

std::vector<ConvergenceRow> convergence_table(long d, long dp, long p_max) {
    std::vector<ConvergenceRow> rows;
    const ConvexPolygon hp = hp_1d(d, dp);
    for (long p = 3; p <= p_max; ++p) {
        if (!is_prime(p)) continue;
        if ((d > 0 && d % p == 0) || (dp > 0 && dp % p == 0)) continue;
        ConvergenceRow row;
        row.p = p;
        row.y = y_values(d, dp, p);
        row.deviation = max_deviation(gnp_1d(d, dp, p), hp);
        rows.push_back(std::move(row));
    }
    return rows;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

}  // namespace npoly
