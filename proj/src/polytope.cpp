#include "npoly/polytope.hpp"

#include <algorithm>

#include "npoly/errors.hpp"

namespace npoly {

namespace {

// det by Bareiss fraction-free elimination on a copy (sizes here are tiny).
Int determinant(std::vector<std::vector<Int>> m) {
    const int n = static_cast<int>(m.size());
    int sign = 1;
    Int prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i)
            if (m[i][k] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) return Int(0);
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

Int cofactor_det(const std::vector<std::vector<Int>>& m, int skip_row, int skip_col) {
    std::vector<std::vector<Int>> sub;
    for (int i = 0; i < static_cast<int>(m.size()); ++i) {
        if (i == skip_row) continue;
        std::vector<Int> row;
        for (int j = 0; j < static_cast<int>(m.size()); ++j)
            if (j != skip_col) row.push_back(m[i][j]);
        sub.push_back(std::move(row));
    }
    if (sub.empty()) return Int(1);
    return determinant(std::move(sub));
}

}  // namespace

TwistVector::TwistVector(std::vector<Rat> fracs) : fracs_(std::move(fracs)) {
    for (const auto& f : fracs_)
        if (f < 0 || f >= 1) throw MathError("twist component outside [0,1)");
}

TwistVector TwistVector::zero(int n) { return TwistVector(std::vector<Rat>(n, Rat(0))); }

bool TwistVector::is_zero() const {
    for (const auto& f : fracs_)
        if (f != 0) return false;
    return true;
}

long TwistVector::order() const {
    Int l = 1;
    for (const auto& f : fracs_) l = boost::multiprecision::lcm(l, rat_den(f));
    return static_cast<long>(l);
}

DirectSumPolytope::DirectSumPolytope(std::vector<std::vector<Int>> basis_columns,
                                     std::vector<Segment1D> segments)
    : n_(static_cast<int>(segments.size())),
      basis_(std::move(basis_columns)),
      segments_(std::move(segments)) {
    if (n_ <= 0) throw MathError("polytope needs at least one axis");
    if (static_cast<int>(basis_.size()) != n_) throw MathError("basis/segment size mismatch");
    for (const auto& col : basis_)
        if (static_cast<int>(col.size()) != n_) throw MathError("basis column size mismatch");
    for (const auto& s : segments_) {
        if (s.d < 0 || s.dp < 0) throw MathError("negative segment degree");
        if (s.d == 0 && s.dp == 0)
            throw MathError("segment with d = d' = 0 (polytope not full-dimensional)");
    }
    // matrix with columns f_i: entry (row j, col i) = basis_[i][j]
    std::vector<std::vector<Int>> m(n_, std::vector<Int>(n_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m[j][i] = basis_[i][j];
    det_ = determinant(m);
    if (det_ == 0) throw MathError("singular basis matrix");
    adj_.assign(n_, std::vector<Int>(n_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            Int c = cofactor_det(m, j, i);
            adj_[i][j] = ((i + j) % 2 == 0) ? c : -c;
        }
}

DirectSumPolytope DirectSumPolytope::standard(std::vector<Segment1D> segments) {
    const int n = static_cast<int>(segments.size());
    std::vector<std::vector<Int>> basis(n, std::vector<Int>(n, Int(0)));
    for (int i = 0; i < n; ++i) basis[i][i] = 1;
    return DirectSumPolytope(std::move(basis), std::move(segments));
}

DirectSumPolytope DirectSumPolytope::segment(long d, long dp) {
    return standard({Segment1D{d, dp}});
}

bool DirectSumPolytope::identity_basis() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (basis_[i][j] != Int(i == j ? 1 : 0)) return false;
    return true;
}

DirectSumPolytope direct_sum(const DirectSumPolytope& a, const DirectSumPolytope& b) {
    const int n = a.n() + b.n();
    std::vector<std::vector<Int>> basis(n, std::vector<Int>(n, Int(0)));
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j) basis[i][j] = a.basis_columns()[i][j];
    for (int i = 0; i < b.n(); ++i)
        for (int j = 0; j < b.n(); ++j) basis[a.n() + i][a.n() + j] = b.basis_columns()[i][j];
    std::vector<Segment1D> segs = a.segments();
    segs.insert(segs.end(), b.segments().begin(), b.segments().end());
    return DirectSumPolytope(std::move(basis), std::move(segs));
}

std::optional<Rat> axis_weight(const Segment1D& seg, const Rat& c) {
    if (c > 0 && seg.d == 0) return std::nullopt;
    if (c < 0 && seg.dp == 0) return std::nullopt;
    if (c == 0) return Rat(0);
    if (seg.d == 0) return -c / seg.dp;
    if (seg.dp == 0) return c / seg.d;
    return std::max(Rat(c / seg.d), Rat(-c / seg.dp));
}

std::optional<Rat> weight(const DirectSumPolytope& P, const std::vector<Rat>& u) {
    if (static_cast<int>(u.size()) != P.n()) throw MathError("weight: dimension mismatch");
    // c = M^{-1} u = adj(M) u / det
    Rat w(0);
    for (int i = 0; i < P.n(); ++i) {
        Rat z(0);
        for (int j = 0; j < P.n(); ++j) z += Rat(P.adjugate()[i][j]) * u[j];
        auto aw = axis_weight(P.segments()[i], z / Rat(P.det()));
        if (!aw) return std::nullopt;
        w += *aw;
    }
    return w;
}

// Defined in hodge.cpp, which owns the lattice enumeration.
long denominator_by_enumeration(const DirectSumPolytope& P, const TwistVector& twist);

// Minimal D with all realized weights in (1/D)N. The naive per-axis lcm can
// overshoot (per-axis halves may always sum to integers), so D comes from the
// reduced denominators of realized total weights; every fractional-part
// combination already occurs below weight n, since one full period of each
// axis progression lies in [0,1).
long denominator(const DirectSumPolytope& P, const TwistVector& twist) {
    if (twist.size() != P.n()) throw MathError("denominator: twist dimension mismatch");
    return denominator_by_enumeration(P, twist);
}

Int lattice_volume(const DirectSumPolytope& P) {
    Int v = boost::multiprecision::abs(P.det());
    for (const auto& s : P.segments()) v *= (s.d + s.dp);
    return v;
}

std::vector<Int> smith_divisors(std::vector<std::vector<Int>> m) {
    const int n = static_cast<int>(m.size());
    std::vector<Int> divisors;
    int top = 0;
    while (top < n) {
        // find the nonzero entry of smallest absolute value in the remaining block
        int pi = -1, pj = -1;
        Int best;
        for (int i = top; i < n; ++i)
            for (int j = top; j < n; ++j)
                if (m[i][j] != 0) {
                    Int a = boost::multiprecision::abs(m[i][j]);
                    if (pi < 0 || a < best) {
                        best = a;
                        pi = i;
                        pj = j;
                    }
                }
        if (pi < 0) {
            for (int i = top; i < n; ++i) divisors.push_back(Int(0));
            break;
        }
        std::swap(m[pi], m[top]);
        for (int i = 0; i < n; ++i) std::swap(m[i][pj], m[i][top]);
        if (m[top][top] < 0)
            for (int j = top; j < n; ++j) m[top][j] = -m[top][j];
        bool clean = true;
        for (int i = top + 1; i < n; ++i)
            if (m[i][top] != 0) {
                Int q = floor_div(m[i][top], m[top][top]);
                for (int j = top; j < n; ++j) m[i][j] -= q * m[top][j];
                if (m[i][top] != 0) clean = false;
            }
        for (int j = top + 1; j < n; ++j)
            if (m[top][j] != 0) {
                Int q = floor_div(m[top][j], m[top][top]);
                for (int i = top; i < n; ++i) m[i][j] -= q * m[i][top];
                if (m[top][j] != 0) clean = false;
            }
        if (!clean) continue;
        // make the pivot divide every remaining entry
        bool redo = false;
        for (int i = top + 1; i < n && !redo; ++i)
            for (int j = top + 1; j < n && !redo; ++j)
                if (m[i][j] % m[top][top] != 0) {
                    for (int jj = top; jj < n; ++jj) m[top][jj] += m[i][jj];
                    redo = true;
                }
        if (redo) continue;
        divisors.push_back(boost::multiprecision::abs(m[top][top]));
        ++top;
    }
    return divisors;
}

std::vector<std::vector<int>> epsilon_set(const std::vector<std::vector<Int>>& basis_columns) {
    const int n = static_cast<int>(basis_columns.size());
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[j][i] = basis_columns[i][j];
    auto div = smith_divisors(m);
    int k = 0;
    for (const auto& d : div) {
        if (d != 1 && d != 2) throw MathError("quotient not of exponent 2");
        if (d == 2) ++k;
    }
    std::vector<std::vector<int>> out;
    for (long mask = 0; mask < (1L << n); ++mask) {
        std::vector<int> eps(n);
        for (int i = 0; i < n; ++i) eps[i] = static_cast<int>((mask >> i) & 1);
        bool in_kernel = true;
        for (int j = 0; j < n && in_kernel; ++j) {
            Int acc = 0;
            for (int i = 0; i < n; ++i)
                if (eps[i]) acc += basis_columns[i][j];
            if (acc % 2 != 0) in_kernel = false;
        }
        if (in_kernel) out.push_back(std::move(eps));
    }
    if (static_cast<long>(out.size()) != (1L << k))
        throw MathError("epsilon_set: kernel size disagrees with Smith form");
    return out;
}

std::vector<std::vector<Int>> half_points(const std::vector<std::vector<Int>>& basis_columns,
                                          const std::vector<std::vector<int>>& eps_set) {
    const int n = static_cast<int>(basis_columns.size());
    std::vector<std::vector<Int>> pts;
    for (const auto& eps : eps_set) {
        std::vector<Int> p(n, Int(0));
        for (int j = 0; j < n; ++j) {
            Int acc = 0;
            for (int i = 0; i < n; ++i)
                if (eps[i]) acc += basis_columns[i][j];
            if (acc % 2 != 0) throw MathError("half_points: non-integral point");
            p[j] = acc / 2;
        }
        pts.push_back(std::move(p));
    }
    return pts;
}

bool nondegenerate_1d(long d, long dp, long a_d, long a_minus_dp, long p) {
    auto face_ok = [p](long deg, long coeff) {
        if (deg == 0) return true;
        return coeff % p != 0 && deg % p != 0;
    };
    return face_ok(d, a_d) && face_ok(dp, a_minus_dp);
}

}  // namespace npoly
