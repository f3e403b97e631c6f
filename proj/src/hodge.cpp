#include "npoly/hodge.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "npoly/errors.hpp"

namespace npoly {

namespace {

// Weights of the coset points {k + t : k in Z} of one axis cone, ascending,
// cut off at max_w. t in [0,1); the origin appears exactly when t = 0.
std::vector<Rat> axis_weight_list(const Segment1D& seg, const Rat& t, const Rat& max_w) {
    std::vector<Rat> out;
    if (t == 0 && max_w >= 0) out.push_back(Rat(0));
    if (seg.d > 0) {
        for (long k = (t == 0 ? 1 : 0);; ++k) {
            Rat w = (Rat(k) + t) / seg.d;
            if (w > max_w) break;
            out.push_back(w);
        }
    }
    if (seg.dp > 0) {
        for (long m = 1;; ++m) {
            Rat w = (Rat(m) - t) / seg.dp;
            if (w > max_w) break;
            out.push_back(w);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::map<Rat, Int> convolve_axis_lists(const std::vector<std::vector<Rat>>& lists,
                                       const Rat& max_w) {
    std::map<Rat, Int> counts{{Rat(0), Int(1)}};
    for (const auto& list : lists) {
        std::map<Rat, Int> next;
        for (const auto& [w0, c] : counts)
            for (const auto& w : list) {
                Rat w1 = w0 + w;
                if (w1 > max_w) break;  // list is ascending
                next[w1] += c;
            }
        counts = std::move(next);
    }
    return counts;
}

long long to_ll(const Int& x, const char* what) {
    if (x > std::numeric_limits<long long>::max() / 4 ||
        x < std::numeric_limits<long long>::min() / 4)
        throw MathError(std::string("integer overflow guard in ") + what);
    return x.convert_to<long long>();
}

// Integer points of (twist + Z^n) inside a bounding box of max_w * Delta,
// filtered by cone membership, counted by exact weight. The inner loop is
// integer-only: with u = v / T (T = lcm of twist denominators) and
// z = sign(det) * adj(M) v, the weight is sum_i max(z_i/(A d_i), -z_i/(A dp_i))
// with A = T |det|, put over the common denominator A * L.
std::map<Rat, Int> weight_counts_box(const DirectSumPolytope& P, const TwistVector& twist,
                                     const Rat& max_w) {
    const int n = P.n();
    Int T_int = 1;
    for (const auto& f : twist.fracs()) T_int = boost::multiprecision::lcm(T_int, rat_den(f));
    const long long T = to_ll(T_int, "twist denominator");
    std::vector<long long> tau(n);
    for (int i = 0; i < n; ++i)
        tau[i] = to_ll(rat_num(twist.fracs()[i]) * (T_int / rat_den(twist.fracs()[i])), "twist");

    // bounding box of max_w * Delta from its vertices +-(max_w d_i) f_i
    std::vector<Rat> lo(n, Rat(0)), hi(n, Rat(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rat a = max_w * Rat(P.segments()[i].d) * Rat(P.basis_columns()[i][j]);
            Rat b = -max_w * Rat(P.segments()[i].dp) * Rat(P.basis_columns()[i][j]);
            lo[j] = std::min({lo[j], a, b});
            hi[j] = std::max({hi[j], a, b});
        }
    std::vector<long long> klo(n), khi(n);
    double box_size = 1.0;
    for (int j = 0; j < n; ++j) {
        klo[j] = to_ll(ceil_rat(lo[j] - twist.fracs()[j]), "box");
        khi[j] = to_ll(floor_rat(hi[j] - twist.fracs()[j]), "box");
        box_size *= static_cast<double>(std::max<long long>(0, khi[j] - klo[j] + 1));
    }
    if (box_size > 6e8) throw MathError("lattice enumeration box too large");

    const int sdet = P.det() < 0 ? -1 : 1;
    std::vector<std::vector<long long>> adj(n, std::vector<long long>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) adj[i][j] = sdet * to_ll(P.adjugate()[i][j], "adjugate");
    const long long A = T * to_ll(boost::multiprecision::abs(P.det()), "det");
    long long L = 1;
    for (const auto& s : P.segments()) {
        if (s.d > 0) L = std::lcm(L, s.d);
        if (s.dp > 0) L = std::lcm(L, s.dp);
    }
    const long long wmax_num = to_ll(ceil_rat(max_w * A * L), "weight cutoff");

    std::map<Rat, Int> counts;
    std::vector<long long> k(klo), v(n);
    while (true) {
        for (int j = 0; j < n; ++j) v[j] = k[j] * T + tau[j];
        long long wnum = 0;
        bool inside = true;
        for (int i = 0; i < n && inside; ++i) {
            long long z = 0;
            for (int j = 0; j < n; ++j) z += adj[i][j] * v[j];
            const auto& seg = P.segments()[i];
            if (z > 0) {
                if (seg.d == 0)
                    inside = false;
                else
                    wnum += z * (L / seg.d);
            } else if (z < 0) {
                if (seg.dp == 0)
                    inside = false;
                else
                    wnum += -z * (L / seg.dp);
            }
            if (wnum > wmax_num) inside = false;
        }
        if (inside) {
            Rat w(Int(wnum), Int(A) * L);
            if (w <= max_w) ++counts[w];
        }
        int j = 0;
        while (j < n && ++k[j] > khi[j]) {
            k[j] = klo[j];
            ++j;
        }
        if (j == n) break;
    }
    return counts;
}

Int binomial(int n, int k) {
    Int b = 1;
    for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
    return b;
}

// (1 - t^D)^n * A, with A given to degree 2nD by its weight counts; verifies
// polynomiality (vanishing on (nD, 2nD]), nonnegativity and P(1) = total.
PoincarePolynomial series_to_polynomial(const std::map<Rat, Int>& counts, int n, long D,
                                        const Int& expected_total) {
    const long deg = static_cast<long>(n) * D, deg2 = 2 * deg;
    std::vector<Int> A(deg2 + 1, Int(0));
    for (const auto& [w, c] : counts) {
        Rat idx = w * D;
        if (rat_den(idx) != 1)
            throw MathError("Poincare consistency failure: weight " + rat_str(w) +
                            " not in (1/" + std::to_string(D) + ")N");
        long i = static_cast<long>(rat_num(idx));
        if (i <= deg2) A[i] += c;
    }
    std::vector<Int> P(deg2 + 1, Int(0));
    for (int j = 0; j <= n; ++j) {
        Int coef = binomial(n, j);
        if (j % 2) coef = -coef;
        const long shift = static_cast<long>(j) * D;
        for (long i = 0; i + shift <= deg2; ++i) P[i + shift] += coef * A[i];
    }
    for (long i = deg + 1; i <= deg2; ++i)
        if (P[i] != 0) throw MathError("Poincare consistency failure: degree exceeds nD");
    Int total = 0;
    for (long i = 0; i <= deg; ++i) {
        if (P[i] < 0) throw MathError("Poincare consistency failure: negative coefficient");
        total += P[i];
    }
    if (total != expected_total)
        throw MathError("Poincare consistency failure: P(1) = " + total.str() + " != n!V = " +
                        expected_total.str());
    PoincarePolynomial out;
    out.D = D;
    out.coeffs.assign(P.begin(), P.begin() + deg + 1);
    return out;
}

long lcm_of_realized_denominators(const std::map<Rat, Int>& counts) {
    Int D = 1;
    for (const auto& [w, c] : counts) D = boost::multiprecision::lcm(D, rat_den(w));
    return static_cast<long>(D);
}

}  // namespace

// used by polytope.cpp for the general-basis denominator
long denominator_by_enumeration(const DirectSumPolytope& P, const TwistVector& twist) {
    // One full period of every axis progression is realized below weight
    // max(n,1), so the realized denominators are complete there.
    return lcm_of_realized_denominators(weight_counts(P, twist, Rat(std::max(P.n(), 1))));
}

Int PoincarePolynomial::total() const {
    return std::accumulate(coeffs.begin(), coeffs.end(), Int(0));
}

ConvexPolygon PoincarePolynomial::polygon() const {
    std::vector<ConvexPolygon::Run> runs;
    for (long i = 0; i < static_cast<long>(coeffs.size()); ++i)
        if (coeffs[i] != 0) runs.emplace_back(Rat(i, D), static_cast<long>(coeffs[i]));
    return ConvexPolygon::from_runs(std::move(runs));
}

std::map<Rat, Int> weight_counts(const DirectSumPolytope& P, const TwistVector& twist,
                                 const Rat& max_w) {
    if (twist.size() != P.n()) throw MathError("weight_counts: twist dimension mismatch");
    if (P.identity_basis()) {
        std::vector<std::vector<Rat>> lists;
        for (int i = 0; i < P.n(); ++i)
            lists.push_back(axis_weight_list(P.segments()[i], twist.fracs()[i], max_w));
        return convolve_axis_lists(lists, max_w);
    }
    return weight_counts_box(P, twist, max_w);
}

std::map<long, Int> graded_dims(const DirectSumPolytope& P, const TwistVector& twist,
                                long max_weight_numerator) {
    if (max_weight_numerator < 0) throw MathError("graded_dims: negative weight bound");
    const long D = denominator(P, twist);
    auto counts = weight_counts(P, twist, Rat(max_weight_numerator, D));
    std::map<long, Int> dims;
    for (const auto& [w, c] : counts) {
        Rat idx = w * D;
        if (rat_den(idx) != 1) throw MathError("graded_dims: weight outside (1/D)N");
        dims[static_cast<long>(rat_num(idx))] += c;
    }
    return dims;
}

PoincarePolynomial poincare_polynomial(const DirectSumPolytope& P, const TwistVector& twist) {
    const long D = denominator(P, twist);
    auto counts = weight_counts(P, twist, Rat(2 * P.n()));
    if (lcm_of_realized_denominators(counts) != D && !counts.empty())
        throw MathError("Poincare consistency failure: denominator mismatch");
    return series_to_polynomial(counts, P.n(), D, lattice_volume(P));
}

ConvexPolygon hodge_polygon(const DirectSumPolytope& P, const TwistVector& twist) {
    return poincare_polynomial(P, twist).polygon();
}

ConvexPolygon hodge_polygon(const DirectSumPolytope& P) {
    return hodge_polygon(P, TwistVector::zero(P.n()));
}

Rat lambda_stickelberger(long r, long s, long nu) {
    if (s < 1 || r < 0 || r >= s) throw MathError("lambda: need 0 <= r < s");
    if (std::gcd(nu, s) != 1) throw MathError("lambda: nu not invertible mod s");
    long m = ((nu % s) + s) % s;
    long j = r, len = 0;
    Int sum = 0;
    do {
        sum += j;
        ++len;
        j = static_cast<long>((static_cast<long long>(m) * j) % s);
    } while (j != r);
    return Rat(sum, Int(s) * len);
}

Rat lambda_digit_sum(long r, long s, long p) {
    if (s < 1 || r < 0 || r >= s) throw MathError("lambda: need 0 <= r < s");
    if (std::gcd(p, s) != 1) throw MathError("lambda: p not invertible mod s");
    const long a = mul_order(p % s == 0 ? 1 : p % s, s);
    Int q = 1;
    for (long i = 0; i < a; ++i) q *= p;
    Int k = (q - 1) * r / s;
    Int digits = 0;
    while (k > 0) {
        digits += k % p;
        k /= p;
    }
    return Rat(digits, Int(a) * (p - 1));
}

namespace {

// HS from the Frobenius orbit of coset fractions. orbit_fracs[j][i] is the
// coset fraction of axis i at orbit position j, already negated: the module
// attached to omega^{(q-1)r/s} lives on the lattice -r/s + Z^n. The k-th
// point of each cone ray is paired across the orbit, so its averaged weight
// is mean_j (k + t_j)/d on the positive ray and mean_j (k + 1 - t_j)/dp on
// the negative one; the polygon comes from the Poincare polynomial of this
// averaged grading.
ConvexPolygon hs_from_orbit(const DirectSumPolytope& P,
                            const std::vector<std::vector<Rat>>& orbit_fracs) {
    const long a = static_cast<long>(orbit_fracs.size());
    if (a == 1) return hodge_polygon(P, TwistVector(orbit_fracs[0]));
    if (!P.identity_basis())
        throw MathError("hs_polygon: nontrivial Frobenius orbit needs a direct-sum basis");

    const Rat max_w(2 * P.n());
    std::vector<std::vector<Rat>> lists;
    for (int i = 0; i < P.n(); ++i) {
        const auto& seg = P.segments()[i];
        long zeros = 0;
        for (long j = 0; j < a; ++j)
            if (orbit_fracs[j][i] == 0) ++zeros;
        if (zeros == a) {
            lists.push_back(axis_weight_list(seg, Rat(0), max_w));
            continue;
        }
        if (zeros > 0) throw MathError("hs orbit mixes trivial and nontrivial cosets");
        std::vector<Rat> out;
        if (seg.d > 0)
            for (long k = 0;; ++k) {
                Rat sum(0);
                for (long j = 0; j < a; ++j) sum += (Rat(k) + orbit_fracs[j][i]) / seg.d;
                Rat w = sum / a;
                if (w > max_w) break;
                out.push_back(w);
            }
        if (seg.dp > 0)
            for (long k = 0;; ++k) {
                Rat sum(0);
                for (long j = 0; j < a; ++j) sum += (Rat(k) + 1 - orbit_fracs[j][i]) / seg.dp;
                Rat w = sum / a;
                if (w > max_w) break;
                out.push_back(w);
            }
        std::sort(out.begin(), out.end());
        lists.push_back(std::move(out));
    }
    auto counts = convolve_axis_lists(lists, max_w);
    const long D = lcm_of_realized_denominators(counts);
    return series_to_polynomial(counts, P.n(), D, lattice_volume(P)).polygon();
}

}  // namespace

ConvexPolygon hs_polygon(const DirectSumPolytope& P, const TwistVector& rs, long nu) {
    if (rs.size() != P.n()) throw MathError("hs_polygon: twist dimension mismatch");
    const long s = rs.order();
    if (std::gcd(nu, s) != 1) throw MathError("hs_polygon: nu not invertible mod s");
    const long a = rs.is_zero() ? 1 : mul_order(((nu % s) + s) % s, s);
    std::vector<std::vector<Rat>> orbit_fracs(a, std::vector<Rat>(P.n()));
    long e = 1 % s;
    for (long j = 0; j < a; ++j) {
        for (int i = 0; i < P.n(); ++i)
            orbit_fracs[j][i] = frac_part(-Rat(e) * rs.fracs()[i]);
        e = static_cast<long>((static_cast<long long>(e) * (((nu % s) + s) % s)) % s);
    }
    return hs_from_orbit(P, orbit_fracs);
}

ConvexPolygon hs_polygon_via_prime(const DirectSumPolytope& P, const TwistVector& rs, long p) {
    if (rs.size() != P.n()) throw MathError("hs_polygon_via_prime: twist dimension mismatch");
    const long s = rs.order();
    if (std::gcd(p, s) != 1) throw MathError("hs_polygon_via_prime: p divides a twist order");
    const long a = rs.is_zero() ? 1 : mul_order(p % s == 0 ? 1 % s : p % s, s);
    Int q = 1;
    for (long i = 0; i < a; ++i) q *= p;
    // delta_i = (q-1) r_i / s_i, orbit delta^{(j)} = p^j delta mod (q-1),
    // module coset fractions frac(-delta^{(j)} / (q-1)).
    std::vector<std::vector<Rat>> orbit_fracs(a, std::vector<Rat>(P.n()));
    for (int i = 0; i < P.n(); ++i) {
        const Rat& f = rs.fracs()[i];
        Int delta = (q - 1) * rat_num(f) / rat_den(f);
        for (long j = 0; j < a; ++j) {
            orbit_fracs[j][i] = frac_part(Rat(-delta, q - 1));
            delta = (delta * p) % (q - 1);
        }
    }
    return hs_from_orbit(P, orbit_fracs);
}

ConvexPolygon hs_1d_closed_form(long d, long dp, long r, long s, long nu) {
    if (d < 0 || dp < 0 || (d == 0 && dp == 0)) throw MathError("hs_1d: bad segment");
    if (r % s == 0) {
        // trivial character: the untwisted slope list applies
        return hodge_polygon(DirectSumPolytope::segment(d, dp));
    }
    const Rat l = lambda_stickelberger(r, s, nu);
    std::vector<Rat> slopes;
    for (long j = 1; j <= d; ++j) slopes.push_back((Rat(j) - l) / d);
    for (long j = 0; j < dp; ++j) slopes.push_back((Rat(j) + l) / dp);
    return ConvexPolygon::from_slopes(std::move(slopes));
}

std::pair<ConvexPolygon, std::vector<ConvexPolygon>> dec_h_decomposition(
    const DirectSumPolytope& P) {
    auto eps_set = epsilon_set(P.basis_columns());
    DirectSumPolytope base = P.untransformed();
    ConvexPolygon hp0 = hodge_polygon(base);
    std::vector<ConvexPolygon> parts;
    ConvexPolygon joined = hp0;
    for (const auto& eps : eps_set) {
        bool zero = std::all_of(eps.begin(), eps.end(), [](int e) { return e == 0; });
        if (zero) continue;
        std::vector<Rat> t;
        for (int e : eps) t.push_back(Rat(e, 2));
        ConvexPolygon part = hodge_polygon(base, TwistVector(std::move(t)));
        joined = juxtapose(joined, part);
        parts.push_back(std::move(part));
    }
    ConvexPolygon whole = hodge_polygon(P);
    if (joined != whole)
        throw MathError("decH identity failed: juxtaposition " + polygon_str(joined) +
                        " != HP(Delta) " + polygon_str(whole));
    return {hp0, parts};
}

}  // namespace npoly
