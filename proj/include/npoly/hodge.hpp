#ifndef NPOLY_HODGE_HPP
#define NPOLY_HODGE_HPP

#include <map>
#include <utility>
#include <vector>

#include "npoly/polygon.hpp"
#include "npoly/polytope.hpp"

namespace npoly {

// P_Delta(t) = (1 - t^D)^n * (Poincare series of the weight-graded module),
// a polynomial of degree <= nD with nonnegative coefficients summing to
// n!V(Delta). coeffs[s] is the length of the Hodge segment of slope s/D.
struct PoincarePolynomial {
    long D = 1;
    std::vector<Int> coeffs;  // indices 0 .. nD

    Int total() const;
    ConvexPolygon polygon() const;
};

// Exact weights of the coset lattice points of C(Delta) with weight <= max_w,
// counted with multiplicity. Twist components are the fractional parts of the
// coset; identity bases enumerate per axis and convolve, general bases walk
// the integer points of a bounding box of max_w * Delta.
std::map<Rat, Int> weight_counts(const DirectSumPolytope& P, const TwistVector& twist,
                                 const Rat& max_w);

// Graded dimensions keyed by weight numerator over D = denominator(P, twist).
std::map<long, Int> graded_dims(const DirectSumPolytope& P, const TwistVector& twist,
                                long max_weight_numerator);

PoincarePolynomial poincare_polynomial(const DirectSumPolytope& P, const TwistVector& twist);

ConvexPolygon hodge_polygon(const DirectSumPolytope& P, const TwistVector& twist);
ConvexPolygon hodge_polygon(const DirectSumPolytope& P);  // untwisted

// Stickelberger ratio: mean of the cycle of r under multiplication by nu in
// Z/sZ, divided by s. In [0,1); zero iff r = 0. Requires gcd(nu, s) = 1.
Rat lambda_stickelberger(long r, long s, long nu);

// Same quantity through the base-p digit sum s_p((q'-1)r/s) / (a(p-1)) with
// q' = p^{ord_s(p)}; used as the independent cross-check.
Rat lambda_digit_sum(long r, long s, long p);

// Hodge-Stickelberger polygon HS(Delta, r/s, nu) for the character
// omega^{(q-1)r/s}, nu = p mod s. Computed from the Frobenius orbit of the
// coset modules with ray-paired slope averaging; see hs_1d_closed_form for
// the 1-d shape it reproduces.
ConvexPolygon hs_polygon(const DirectSumPolytope& P, const TwistVector& rs, long nu);

// Re-derivation through a concrete prime p = nu mod s: the orbit
// delta^{(i)} = p^i delta mod (q-1) with q = p^{ord_s(p)} is computed in
// integers and fed through the same construction. Must agree with hs_polygon.
ConvexPolygon hs_polygon_via_prime(const DirectSumPolytope& P, const TwistVector& rs, long p);

// The 1-d slope list (1-l)/d, ..., (d-l)/d, l/d', ..., (d'-1+l)/d' with
// l = lambda_stickelberger(r, s, nu); r = 0 routes to the untwisted list.
ConvexPolygon hs_1d_closed_form(long d, long dp, long r, long s, long nu);

// HP(Delta_0) and the HS(Delta_0, eps/2) parts for eps in E \ {0}; their
// juxtaposition is checked against HP(Delta) computed by direct enumeration.
std::pair<ConvexPolygon, std::vector<ConvexPolygon>> dec_h_decomposition(
    const DirectSumPolytope& P);

}  // namespace npoly

#endif
