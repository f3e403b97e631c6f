#ifndef NPOLY_LFUNCTION_HPP
#define NPOLY_LFUNCTION_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "npoly/polygon.hpp"
#include "npoly/polytope.hpp"

namespace npoly {

// F_{p^r} = F_p[x]/(f) with f chosen deterministically so that the class of
// x generates the multiplicative group; enumeration of k_r^x is then just
// repeated multiplication by x. The base generator g is the smallest
// primitive root mod p, and the norm of any point is tracked through its
// discrete log with respect to g.
class FiniteField {
public:
    using Elt = std::vector<std::uint32_t>;

    FiniteField(long p, int r);

    long p() const { return p_; }
    int r() const { return r_; }
    long long order() const { return order_; }  // p^r
    long base_generator() const { return g_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    Elt one() const;
    Elt x() const;  // the primitive element
    Elt mul(const Elt& a, const Elt& b) const;
    Elt pow(Elt a, long long e) const;
    // trace to F_p, returned as the integer lift in [0, p)
    long trace(const Elt& a) const;
    // dlog_g(N(x)) where N is the norm to F_p; dlog_g(N(x^t)) = t * this mod (p-1)
    long norm_dlog_of_x() const { return norm_dlog_x_; }

private:
    long p_;
    int r_;
    long long order_;
    long g_;
    std::vector<std::uint32_t> modulus_;  // monic, degree r: coefficients c_0..c_{r-1}
    std::vector<long> trace_basis_;       // trace of x^i, i < r
    long norm_dlog_x_;
};

// Laurent polynomial over F_p; coefficients are reduced mod p and zero terms
// dropped at construction.
class LaurentPolynomial {
public:
    LaurentPolynomial(long p, int n, std::map<std::vector<long>, long> terms);

    long p() const { return p_; }
    int n() const { return n_; }
    const std::map<std::vector<long>, long>& terms() const { return terms_; }

    // Newton polytope at infinity, requiring every term to live on a single
    // coordinate axis (the oracle's regime). Throws MathError otherwise.
    DirectSumPolytope polytope() const;

    // coefficient of x_axis^e (0 when absent)
    long axis_coefficient(int axis, long e) const;

private:
    long p_;
    int n_;
    std::map<std::vector<long>, long> terms_;
};

// Multiplicative character datum: component i is omega^{(p-1) r_i / s_i}.
// Every s_i must divide p - 1.
struct CharacterSpec {
    TwistVector fracs;

    static CharacterSpec trivial(int n) { return {TwistVector::zero(n)}; }
    void validate(long p) const;
    long order() const { return fracs.order(); }
};

// Element of Q(zeta_p) (x) Q(zeta_s) in the power basis zeta_p^i zeta_s^j,
// 0 <= i <= p-2, 0 <= j < phi(s).
class Cyclo {
public:
    Cyclo(long p, long s);  // zero

    static Cyclo integer(long p, long s, const Rat& value);
    // sum of counts[i][j] * zeta_p^i * zeta_s^j with unreduced exponents
    // 0 <= i < p, 0 <= j < s
    static Cyclo from_root_counts(long p, long s,
                                  const std::vector<std::vector<long long>>& counts);

    long p() const { return p_; }
    long s() const { return s_; }
    int phi() const { return phi_; }
    const Rat& coord(int i, int j) const { return coords_[i * phi_ + j]; }

    bool is_zero() const;
    bool is_integral() const;

    Cyclo& operator+=(const Cyclo& o);
    Cyclo operator*(const Cyclo& o) const;
    Cyclo operator*(const Rat& c) const;

private:
    long p_, s_;
    int phi_;
    std::vector<Rat> coords_;  // (p-1) x phi(s), row-major
};

// Coefficients of the s-th cyclotomic polynomial (degree phi(s)).
const std::vector<Int>& cyclotomic_poly(long s);

// S_r(f, chi) as an exact cyclotomic integer. For the direct-sum supports the
// oracle handles, the sum over the n-torus factors through the axes, so the
// enumeration cost is n*(p^r - 1) points; `budget` bounds that count.
Cyclo exp_sum(const LaurentPolynomial& f, const CharacterSpec& chi, const FiniteField& field,
              long long budget);

// Reference implementation enumerating the full torus (p^r - 1)^n; used to
// cross-check the factored path on tiny inputs.
Cyclo exp_sum_full_torus(const LaurentPolynomial& f, const CharacterSpec& chi,
                         const FiniteField& field, long long budget);

// Coefficients c_0..c_degree of L^{(-1)^{n-1}} from S_1..S_m, m >= degree+2.
// Verifies integrality, vanishing on (degree, degree+2], and c_degree != 0.
std::vector<Cyclo> l_polynomial(const std::vector<Cyclo>& sums, int n_vars, long degree);

// q-adic valuation (q = p, v(p) = 1) of an integral cyclotomic element under
// the Teichmueller pinning zeta_s -> T^{(p-1)/s}, T = Teich(g), computed mod
// p^precision. nullopt means zero to this precision; retry with more.
std::optional<Rat> pi_adic_valuation(const Cyclo& c, long precision);

struct OracleResult {
    ConvexPolygon np;
    ConvexPolygon hodge_bound;  // HP, or the HS bound when chi is nontrivial
    bool dominates_bound = false;
    long degree = 0;
    std::vector<std::optional<Rat>> valuations;  // v_q(c_k), nullopt for c_k = 0
};

OracleResult newton_polygon_L(const LaurentPolynomial& f, const CharacterSpec& chi,
                              long long budget);

}  // namespace npoly

#endif
