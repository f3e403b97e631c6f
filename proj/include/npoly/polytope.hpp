#ifndef NPOLY_POLYTOPE_HPP
#define NPOLY_POLYTOPE_HPP

#include <optional>
#include <vector>

#include "npoly/rational.hpp"

namespace npoly {

// One axis of a direct sum: the segment [-dp, d] along basis vector f_i.
struct Segment1D {
    long d = 0;
    long dp = 0;
};

// Fractional twist (r_1/s_1, ..., r_n/s_n), each component in [0,1).
class TwistVector {
public:
    TwistVector() = default;
    explicit TwistVector(std::vector<Rat> fracs);

    static TwistVector zero(int n);

    const std::vector<Rat>& fracs() const { return fracs_; }
    int size() const { return static_cast<int>(fracs_.size()); }
    bool is_zero() const;
    // lcm of the component denominators
    long order() const;

    bool operator==(const TwistVector& o) const { return fracs_ == o.fracs_; }

private:
    std::vector<Rat> fracs_;
};

// The lattice polytope hull{d_i f_i, -d_i' f_i, 0} where the f_i are the
// columns of an integer matrix M with det M != 0.
class DirectSumPolytope {
public:
    // basis[i][j] = j-th coordinate of f_i (i.e. basis holds the columns).
    DirectSumPolytope(std::vector<std::vector<Int>> basis_columns,
                      std::vector<Segment1D> segments);

    // Identity basis: the direct sum of segments [-dp_i, d_i] of the paper.
    static DirectSumPolytope standard(std::vector<Segment1D> segments);
    static DirectSumPolytope segment(long d, long dp);  // 1-d convenience

    int n() const { return n_; }
    const std::vector<Segment1D>& segments() const { return segments_; }
    const std::vector<std::vector<Int>>& basis_columns() const { return basis_; }
    bool identity_basis() const;
    const Int& det() const { return det_; }
    // adj(M) with M columns = basis; adj*M = det*I.
    const std::vector<std::vector<Int>>& adjugate() const { return adj_; }

    // Same segments over the identity basis.
    DirectSumPolytope untransformed() const { return standard(segments_); }

private:
    int n_;
    std::vector<std::vector<Int>> basis_;  // basis_[i] = column f_i
    std::vector<Segment1D> segments_;
    Int det_;
    std::vector<std::vector<Int>> adj_;
};

DirectSumPolytope direct_sum(const DirectSumPolytope& a, const DirectSumPolytope& b);

// Weight of a single axis coordinate: max(c/d, -c/dp) with zero-degree terms
// dropped; nullopt when c falls outside the axis cone (c > 0 with d = 0, or
// c < 0 with dp = 0).
std::optional<Rat> axis_weight(const Segment1D& seg, const Rat& c);

// w_Delta(u) = min{rho >= 0 : u in rho*Delta}; nullopt when u is outside C(Delta).
std::optional<Rat> weight(const DirectSumPolytope& P, const std::vector<Rat>& u);

// Minimal D with w(M_{Delta,twist}) contained in (1/D)N.
long denominator(const DirectSumPolytope& P, const TwistVector& twist);

// n! V(Delta) = |det M| * prod(d_i + d_i')
Int lattice_volume(const DirectSumPolytope& P);

// Smith normal form: returns the elementary divisors d_1 | d_2 | ... | d_n
// (nonnegative) of an integer matrix.
std::vector<Int> smith_divisors(std::vector<std::vector<Int>> m);

// All eps in {0,1}^n with M*eps == 0 mod 2, for M with Z^n / M Z^n of
// exponent dividing 2 (checked via the Smith divisors). Contains 0; the
// count is |det M|.
std::vector<std::vector<int>> epsilon_set(const std::vector<std::vector<Int>>& basis_columns);

// The lattice points (1/2) M eps for eps in E: the 2^k integer points of the
// half-open fundamental domain [0,1[f_1 x ... x [0,1[f_n.
std::vector<std::vector<Int>> half_points(const std::vector<std::vector<Int>>& basis_columns,
                                          const std::vector<std::vector<int>>& eps_set);

// Non-degeneracy of a 1-variable Laurent polynomial on [-dp, d]: both extreme
// faces must have nonvanishing torus-critical locus.
bool nondegenerate_1d(long d, long dp, long a_d, long a_minus_dp, long p);

}  // namespace npoly

#endif
