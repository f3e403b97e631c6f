#include "npoly/lfunction.hpp"

#include <algorithm>
#include <numeric>

#include "npoly/errors.hpp"
#include "npoly/gnp.hpp"
#include "npoly/hodge.hpp"

namespace npoly {

namespace {

using Poly = std::vector<std::uint32_t>;  // dense coefficients over F_p, low degree first

void ptrim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly pmul(const Poly& a, const Poly& b, long p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = static_cast<std::uint32_t>(
                (c[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
    ptrim(c);
    return c;
}

// a mod f, f monic
Poly pmod(Poly a, const Poly& f, long p) {
    const std::size_t df = f.size() - 1;
    while (a.size() > df) {
        std::uint64_t c = a.back();
        const std::size_t shift = a.size() - 1 - df;
        if (c)
            for (std::size_t j = 0; j < df; ++j)
                a[shift + j] = static_cast<std::uint32_t>(
                    (a[shift + j] + static_cast<std::uint64_t>(p - 1) * c % p * f[j]) % p);
        a.pop_back();
        ptrim(a);
        if (a.size() <= df) break;
    }
    ptrim(a);
    return a;
}

Poly ppowmod(Poly base, long long e, const Poly& f, long p) {
    Poly result{1};
    base = pmod(std::move(base), f, p);
    while (e > 0) {
        if (e & 1) result = pmod(pmul(result, base, p), f, p);
        base = pmod(pmul(base, base, p), f, p);
        e >>= 1;
    }
    return result;
}

Poly pgcd(Poly a, Poly b, long p) {
    while (!b.empty()) {
        // make b monic for pmod
        std::uint32_t lead = b.back();
        if (lead != 1) {
            std::uint64_t inv = 1;
            // Fermat inverse
            long e = p - 2;
            std::uint64_t acc = 1, base = lead;
            while (e > 0) {
                if (e & 1) acc = acc * base % p;
                base = base * base % p;
                e >>= 1;
            }
            inv = acc;
            for (auto& c : b) c = static_cast<std::uint32_t>(c * inv % p);
        }
        Poly r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::vector<long> prime_factors(long long m) {
    std::vector<long> out;
    for (long long q = 2; q * q <= m; ++q)
        if (m % q == 0) {
            out.push_back(static_cast<long>(q));
            while (m % q == 0) m /= q;
        }
    if (m > 1) out.push_back(static_cast<long>(m));
    return out;
}

long smallest_primitive_root(long p) {
    auto factors = prime_factors(p - 1);
    for (long g = 2; g < p; ++g) {
        bool ok = true;
        for (long q : factors)
            if (mod_pow(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw MathError("no primitive root found (p not prime?)");
}

bool is_irreducible(const Poly& f, long p, int r) {
    // Rabin: x^{p^r} == x mod f, and gcd(x^{p^{r/l}} - x, f) = 1 for primes l | r
    long long pr = 1;
    for (int i = 0; i < r; ++i) pr *= p;
    Poly x{0, 1};
    Poly xq = ppowmod(x, pr, f, p);
    if (xq != pmod(x, f, p)) return false;
    for (long l : prime_factors(r)) {
        long long pk = 1;
        for (int i = 0; i < r / l; ++i) pk *= p;
        Poly t = ppowmod(x, pk, f, p);
        // t - x
        Poly diff = t;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = static_cast<std::uint32_t>((diff[1] + p - 1) % p);
        ptrim(diff);
        Poly g = pgcd(f, diff, p);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace

FiniteField::FiniteField(long p, int r) : p_(p), r_(r) {
    if (p < 3 || !is_prime(p)) throw MathError("field characteristic must be an odd prime");
    if (r < 1) throw MathError("field degree must be positive");
    order_ = 1;
    for (int i = 0; i < r; ++i) {
        if (order_ > (1LL << 62) / p) throw MathError("field too large");
        order_ *= p;
    }
    g_ = smallest_primitive_root(p);

    // Deterministic search for a monic irreducible modulus whose root x is a
    // multiplicative generator; enumeration order makes the choice canonical.
    auto mfactors = prime_factors(order_ - 1);
    std::vector<std::uint32_t> c(r, 0);
    bool found = false;
    while (!found) {
        // next coefficient vector (base-p counter), c_0 != 0 needed
        int i = 0;
        while (i < r && ++c[i] == static_cast<std::uint32_t>(p)) c[i++] = 0;
        if (i == r) break;
        if (c[0] == 0) continue;
        Poly f(c.begin(), c.end());
        f.push_back(1);
        if (!is_irreducible(f, p, r)) continue;
        Poly x{0, 1};
        bool primitive = true;
        for (long q : mfactors) {
            Poly t = ppowmod(x, (order_ - 1) / q, f, p);
            if (t == Poly{1}) {
                primitive = false;
                break;
            }
        }
        if (!primitive) continue;
        modulus_.assign(f.begin(), f.end() - 1);  // store c_0..c_{r-1}
        found = true;
    }
    if (!found) throw MathError("no primitive modulus found");

    Poly f(modulus_.begin(), modulus_.end());
    f.push_back(1);
    trace_basis_.assign(r, 0);
    for (int i = 0; i < r; ++i) {
        Poly e(i + 1, 0);
        e[i] = 1;
        Poly acc = pmod(e, f, p);
        Poly frob = acc;
        for (int j = 1; j < r; ++j) {
            frob = ppowmod(frob, p, f, p);
            if (frob.size() > acc.size()) acc.resize(frob.size(), 0);
            for (std::size_t k = 0; k < frob.size(); ++k)
                acc[k] = static_cast<std::uint32_t>((acc[k] + frob[k]) % p);
        }
        ptrim(acc);
        for (std::size_t k = 1; k < acc.size(); ++k)
            if (acc[k]) throw MathError("trace of basis element is not scalar");
        trace_basis_[i] = acc.empty() ? 0 : acc[0];
    }

    Poly nx = ppowmod(Poly{0, 1}, (order_ - 1) / (p - 1), f, p);
    for (std::size_t k = 1; k < nx.size(); ++k)
        if (nx[k]) throw MathError("norm of generator is not scalar");
    long nval = nx.empty() ? 0 : nx[0];
    if (nval == 0) throw MathError("norm of generator vanishes");
    long e = 0;
    long cur = 1;
    while (cur != nval) {
        cur = cur * g_ % p;
        if (++e >= p) throw MathError("dlog failure");
    }
    norm_dlog_x_ = e;
}

FiniteField::Elt FiniteField::one() const {
    Elt e(r_, 0);
    e[0] = 1;
    return e;
}

FiniteField::Elt FiniteField::x() const {
    Elt e(r_, 0);
    if (r_ == 1)
        e[0] = static_cast<std::uint32_t>((p_ - modulus_[0]) % p_);  // x = -c_0 mod (x + c_0)
    else
        e[1] = 1;
    return e;
}

FiniteField::Elt FiniteField::mul(const Elt& a, const Elt& b) const {
    std::vector<std::uint64_t> buf(2 * r_ - 1, 0);
    for (int i = 0; i < r_; ++i) {
        if (!a[i]) continue;
        for (int j = 0; j < r_; ++j) buf[i + j] += static_cast<std::uint64_t>(a[i]) * b[j];
    }
    for (int i = 2 * r_ - 2; i >= r_; --i) {
        std::uint64_t c = buf[i] % p_;
        if (!c) continue;
        // x^r = -(c_{r-1} x^{r-1} + ... + c_0)
        for (int j = 0; j < r_; ++j)
            buf[i - r_ + j] += c * ((p_ - modulus_[j]) % p_);
    }
    Elt out(r_);
    for (int j = 0; j < r_; ++j) out[j] = static_cast<std::uint32_t>(buf[j] % p_);
    return out;
}

FiniteField::Elt FiniteField::pow(Elt a, long long e) const {
    Elt result = one();
    while (e > 0) {
        if (e & 1) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

long FiniteField::trace(const Elt& a) const {
    std::uint64_t t = 0;
    for (int i = 0; i < r_; ++i) t += static_cast<std::uint64_t>(a[i]) * trace_basis_[i];
    return static_cast<long>(t % p_);
}

LaurentPolynomial::LaurentPolynomial(long p, int n, std::map<std::vector<long>, long> terms)
    : p_(p), n_(n) {
    if (p < 2) throw MathError("characteristic must be prime");
    for (auto& [e, c] : terms) {
        if (static_cast<int>(e.size()) != n) throw MathError("exponent arity mismatch");
        long cc = ((c % p) + p) % p;
        if (cc != 0) terms_[e] = cc;
    }
    if (terms_.empty()) throw MathError("Laurent polynomial with empty support");
}

DirectSumPolytope LaurentPolynomial::polytope() const {
    std::vector<Segment1D> segs(n_);
    for (const auto& [e, c] : terms_) {
        int axis = -1;
        for (int i = 0; i < n_; ++i)
            if (e[i] != 0) {
                if (axis >= 0)
                    throw MathError("oracle requires direct-sum support (one variable per term)");
                axis = i;
            }
        if (axis < 0) continue;  // constant term
        segs[axis].d = std::max(segs[axis].d, e[axis]);
        segs[axis].dp = std::max(segs[axis].dp, -e[axis]);
    }
    return DirectSumPolytope::standard(std::move(segs));
}

long LaurentPolynomial::axis_coefficient(int axis, long e) const {
    if (e == 0) return 0;
    std::vector<long> key(n_, 0);
    key[axis] = e;
    auto it = terms_.find(key);
    return it == terms_.end() ? 0 : it->second;
}

void CharacterSpec::validate(long p) const {
    for (const auto& f : fracs.fracs())
        if ((p - 1) % static_cast<long>(rat_den(f)) != 0)
            throw MathError("character order " + rat_den(f).str() + " does not divide p-1");
}

// ---------------------------------------------------------------------------
// cyclotomic arithmetic

const std::vector<Int>& cyclotomic_poly(long s) {
    static std::map<long, std::vector<Int>> cache;
    auto it = cache.find(s);
    if (it != cache.end()) return it->second;
    // x^s - 1 divided by all proper cyclotomic factors
    std::vector<Int> num(s + 1, Int(0));
    num[0] = -1;
    num[s] = 1;
    for (long d = 1; d < s; ++d) {
        if (s % d != 0) continue;
        const auto& phi_d = cyclotomic_poly(d);
        // exact division num /= phi_d
        std::vector<Int> q(num.size() - phi_d.size() + 1, Int(0));
        std::vector<Int> rem = num;
        for (long i = static_cast<long>(q.size()) - 1; i >= 0; --i) {
            Int c = rem[i + phi_d.size() - 1];
            q[i] = c;  // phi_d is monic
            if (c != 0)
                for (std::size_t k = 0; k < phi_d.size(); ++k) rem[i + k] -= c * phi_d[k];
        }
        for (const auto& rc : rem)
            if (rc != 0) throw MathError("cyclotomic polynomial division failure");
        num = std::move(q);
    }
    return cache.emplace(s, std::move(num)).first->second;
}

Cyclo::Cyclo(long p, long s) : p_(p), s_(s) {
    phi_ = static_cast<int>(cyclotomic_poly(s).size()) - 1;
    coords_.assign(static_cast<std::size_t>(p_ - 1) * phi_, Rat(0));
}

Cyclo Cyclo::integer(long p, long s, const Rat& value) {
    Cyclo c(p, s);
    c.coords_[0] = value;
    return c;
}

namespace {

// reduce a length-(p) column vector of zeta_p powers into the basis 0..p-2
// and a Y-polynomial mod Phi_s; works on a full rectangular array.
void reduce_zeta_p_rows(std::vector<std::vector<Rat>>& rows, long p) {
    // rows.size() may exceed p-1; X^e with e >= p-1 folds down using
    // X^{p-1} = -(1 + X + ... + X^{p-2})
    for (long e = static_cast<long>(rows.size()) - 1; e >= p - 1; --e) {
        for (long i = e - (p - 1); i <= e - 1; ++i)
            for (std::size_t j = 0; j < rows[e].size(); ++j) rows[i][j] -= rows[e][j];
        rows[e].assign(rows[e].size(), Rat(0));
        rows.pop_back();
    }
}

void reduce_mod_cyclotomic(std::vector<Rat>& ypoly, long s) {
    const auto& phi = cyclotomic_poly(s);
    const long dphi = static_cast<long>(phi.size()) - 1;
    for (long e = static_cast<long>(ypoly.size()) - 1; e >= dphi; --e) {
        Rat c = ypoly[e];
        if (c != 0)
            for (long k = 0; k <= dphi; ++k) ypoly[e - dphi + k] -= c * Rat(phi[k]);
        ypoly.pop_back();
    }
    ypoly.resize(dphi, Rat(0));
}

}  // namespace

Cyclo Cyclo::from_root_counts(long p, long s,
                              const std::vector<std::vector<long long>>& counts) {
    std::vector<std::vector<Rat>> rows(p, std::vector<Rat>(s, Rat(0)));
    for (long i = 0; i < p; ++i)
        for (long j = 0; j < s; ++j) rows[i][j] = Rat(counts[i][j]);
    reduce_zeta_p_rows(rows, p);
    Cyclo out(p, s);
    for (long i = 0; i < p - 1; ++i) {
        reduce_mod_cyclotomic(rows[i], s);
        for (int j = 0; j < out.phi_; ++j) out.coords_[i * out.phi_ + j] = rows[i][j];
    }
    return out;
}

bool Cyclo::is_zero() const {
    for (const auto& c : coords_)
        if (c != 0) return false;
    return true;
}

bool Cyclo::is_integral() const {
    for (const auto& c : coords_)
        if (rat_den(c) != 1) return false;
    return true;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
    if (p_ != o.p_ || s_ != o.s_) throw MathError("cyclotomic ring mismatch");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

Cyclo Cyclo::operator*(const Cyclo& o) const {
    if (p_ != o.p_ || s_ != o.s_) throw MathError("cyclotomic ring mismatch");
    const int np = static_cast<int>(p_ - 1), nphi = phi_;
    std::vector<std::vector<Rat>> rows(2 * np - 1, std::vector<Rat>(2 * nphi - 1, Rat(0)));
    for (int i1 = 0; i1 < np; ++i1)
        for (int j1 = 0; j1 < nphi; ++j1) {
            const Rat& a = coords_[i1 * nphi + j1];
            if (a == 0) continue;
            for (int i2 = 0; i2 < np; ++i2)
                for (int j2 = 0; j2 < nphi; ++j2) {
                    const Rat& b = o.coords_[i2 * nphi + j2];
                    if (b == 0) continue;
                    rows[i1 + i2][j1 + j2] += a * b;
                }
        }
    reduce_zeta_p_rows(rows, p_);
    Cyclo out(p_, s_);
    for (int i = 0; i < np; ++i) {
        reduce_mod_cyclotomic(rows[i], s_);
        for (int j = 0; j < nphi; ++j) out.coords_[i * nphi + j] = rows[i][j];
    }
    return out;
}

Cyclo Cyclo::operator*(const Rat& c) const {
    Cyclo out(p_, s_);
    for (std::size_t i = 0; i < coords_.size(); ++i) out.coords_[i] = coords_[i] * c;
    return out;
}

// ---------------------------------------------------------------------------
// exponential sums

namespace {

struct AxisTerm {
    long long exp_mod;  // exponent reduced mod (order-1), as a step in dlog space
    long coeff;
};

// S over one axis torus: counts[t][c] accrues the point x^t with additive
// trace lift t and zeta_s class c; the cyclotomic element is assembled once
// at the end.
Cyclo axis_exp_sum(const FiniteField& F, const std::vector<std::pair<long, long>>& monomials,
                   const Rat& chi_frac, long s_global) {
    const long p = F.p();
    const long long per = F.order() - 1;
    const long si = static_cast<long>(rat_den(chi_frac));
    const long ri = static_cast<long>(rat_num(chi_frac));
    const long stretch = s_global / si;
    const long e0 = F.norm_dlog_of_x();

    std::vector<AxisTerm> terms;
    std::vector<FiniteField::Elt> steps, cur;
    for (const auto& [e, a] : monomials) {
        long long em = e % per;
        if (em < 0) em += per;
        terms.push_back({em, a});
        steps.push_back(F.pow(F.x(), em));
        cur.push_back(F.one());
    }

    std::vector<std::vector<long long>> counts(p, std::vector<long long>(s_global, 0));
    long m = 0;  // dlog_g of the norm of the current point
    for (long long t = 0; t < per; ++t) {
        std::uint64_t tr = 0;
        for (std::size_t j = 0; j < terms.size(); ++j)
            tr += static_cast<std::uint64_t>(terms[j].coeff) * F.trace(cur[j]);
        const long lift = static_cast<long>(tr % p);
        const long cls = ((ri % si) * (m % si)) % si;
        ++counts[lift][cls * stretch];
        for (std::size_t j = 0; j < terms.size(); ++j) cur[j] = F.mul(cur[j], steps[j]);
        m = (m + e0) % (p - 1);
    }
    return Cyclo::from_root_counts(p, s_global, counts);
}

Cyclo psi_of_constant(long p, long s_global, long coeff, long long r_degree) {
    // psi_r(c) = zeta_p^{Tr(c)} with Tr(c) = r*c for c in F_p
    std::vector<std::vector<long long>> counts(p, std::vector<long long>(s_global, 0));
    long lift = static_cast<long>((static_cast<long long>(coeff) % p * (r_degree % p)) % p);
    ++counts[lift][0];
    return Cyclo::from_root_counts(p, s_global, counts);
}

}  // namespace

Cyclo exp_sum(const LaurentPolynomial& f, const CharacterSpec& chi, const FiniteField& field,
              long long budget) {
    const long p = field.p();
    if (f.p() != p) throw MathError("exp_sum: field characteristic mismatch");
    chi.validate(p);
    const int n = f.n();
    if (chi.fracs.size() != n) throw MathError("exp_sum: character arity mismatch");
    const long long per = field.order() - 1;
    const long long required = static_cast<long long>(n) * per;
    if (required > budget)
        throw BudgetError("exp_sum: enumeration of " + std::to_string(required) +
                              " points exceeds budget " + std::to_string(budget),
                          required);
    const long s = std::max<long>(1, chi.order());

    // group terms by axis
    std::vector<std::vector<std::pair<long, long>>> by_axis(n);
    long constant = 0;
    for (const auto& [e, c] : f.terms()) {
        int axis = -1;
        for (int i = 0; i < n; ++i)
            if (e[i] != 0) {
                if (axis >= 0)
                    throw MathError("oracle requires direct-sum support (one variable per term)");
                axis = i;
            }
        if (axis < 0)
            constant = c;
        else
            by_axis[axis].emplace_back(e[axis], c);
    }

    Cyclo result = Cyclo::integer(p, s, Rat(1));
    if (constant != 0) result = result * psi_of_constant(p, s, constant, field.r());
    for (int i = 0; i < n; ++i) {
        if (by_axis[i].empty()) {
            // sum of chi_i over the axis torus: (q_r - 1) for trivial chi_i, else 0
            if (chi.fracs.fracs()[i] == 0) {
                result = result * Rat(per);
            } else {
                return Cyclo(p, s);
            }
            continue;
        }
        result = result * axis_exp_sum(field, by_axis[i], chi.fracs.fracs()[i], s);
    }
    return result;
}

Cyclo exp_sum_full_torus(const LaurentPolynomial& f, const CharacterSpec& chi,
                         const FiniteField& field, long long budget) {
    const long p = field.p();
    chi.validate(p);
    const int n = f.n();
    const long long per = field.order() - 1;
    double total_d = 1;
    for (int i = 0; i < n; ++i) total_d *= static_cast<double>(per);
    if (total_d > static_cast<double>(budget))
        throw BudgetError("exp_sum_full_torus: torus too large", budget + 1);
    const long s = std::max<long>(1, chi.order());
    const long e0 = field.norm_dlog_of_x();

    // per-axis power tables
    std::vector<FiniteField::Elt> powers(per, field.one());
    for (long long t = 1; t < per; ++t) powers[t] = field.mul(powers[t - 1], field.x());

    std::vector<std::vector<long long>> counts(p, std::vector<long long>(s, 0));
    std::vector<long long> idx(n, 0);
    while (true) {
        // evaluate f at (x^{idx_0}, ..., x^{idx_{n-1}})
        std::uint64_t tr = 0;
        for (const auto& [e, c] : f.terms()) {
            FiniteField::Elt m = field.one();
            for (int i = 0; i < n; ++i) {
                if (e[i] == 0) continue;
                long long ee = (e[i] % per * (idx[i] % per)) % per;
                if (ee < 0) ee += per;
                m = field.mul(m, field.pow(field.x(), ee));
            }
            tr += static_cast<std::uint64_t>(c) * field.trace(m);
        }
        long cls = 0;
        for (int i = 0; i < n; ++i) {
            const Rat& fr = chi.fracs.fracs()[i];
            const long si = static_cast<long>(rat_den(fr));
            const long ri = static_cast<long>(rat_num(fr));
            long mi = static_cast<long>((idx[i] % (p - 1)) * e0 % (p - 1));
            cls = (cls + (ri % si) * (mi % si) % si * (s / si)) % s;
        }
        ++counts[tr % p][cls];
        int j = 0;
        while (j < n && ++idx[j] >= per) {
            idx[j] = 0;
            ++j;
        }
        if (j == n) break;
    }
    return Cyclo::from_root_counts(p, s, counts);
}

std::vector<Cyclo> l_polynomial(const std::vector<Cyclo>& sums, int n_vars, long degree) {
    const long m = static_cast<long>(sums.size());
    if (m < degree + 2) throw MathError("l_polynomial: need at least degree+2 sums");
    const long p = sums[0].p(), s = sums[0].s();
    const int sign = (n_vars % 2 == 1) ? 1 : -1;

    std::vector<Cyclo> c;
    c.push_back(Cyclo::integer(p, s, Rat(1)));
    for (long k = 1; k <= m; ++k) {
        Cyclo acc(p, s);
        for (long r = 1; r <= k; ++r) acc += sums[r - 1] * c[k - r];
        c.push_back(acc * Rat(Int(sign), Int(k)));
    }
    for (long k = 0; k <= m; ++k)
        if (!c[k].is_integral()) throw MathError("non-integral L-coefficient at T^" +
                                                 std::to_string(k));
    for (long k = degree + 1; k <= degree + 2; ++k)
        if (!c[k].is_zero())
            throw DegenerateError("degree check failed: c_" + std::to_string(k) +
                                  " != 0, f likely degenerate");
    if (c[degree].is_zero())
        throw DegenerateError("degree check failed: c_degree = 0, f likely degenerate");
    c.resize(degree + 1, Cyclo(p, s));
    return c;
}

std::optional<Rat> pi_adic_valuation(const Cyclo& c, long precision) {
    const long p = c.p(), s = c.s();
    if ((p - 1) % s != 0) throw MathError("pi_adic_valuation: s does not divide p-1");
    if (!c.is_integral()) throw MathError("pi_adic_valuation: non-integral element");
    if (c.is_zero()) return std::nullopt;

    Int pN = 1;
    for (long i = 0; i < precision; ++i) pN *= p;

    // Teichmueller lift of the pinned generator, then zeta_s = T^{(p-1)/s}
    Int t = smallest_primitive_root(p);
    for (long i = 0; i < precision; ++i) t = boost::multiprecision::powm(t, Int(p), pN);
    Int zs = boost::multiprecision::powm(t, Int((p - 1) / s), pN);
    std::vector<Int> zs_pow(c.phi(), Int(1));
    for (int j = 1; j < c.phi(); ++j) zs_pow[j] = zs_pow[j - 1] * zs % pN;

    // a_i = sum_j coord(i,j) zeta_s^j mod p^N
    std::vector<Int> a(p - 1, Int(0));
    for (long i = 0; i < p - 1; ++i) {
        Int acc = 0;
        for (int j = 0; j < c.phi(); ++j) acc += rat_num(c.coord(i, j)) % pN * zs_pow[j] % pN;
        acc %= pN;
        if (acc < 0) acc += pN;
        a[i] = acc;
    }

    // zeta_p = 1 + pi: b_l = sum_{i >= l} C(i,l) a_i
    std::vector<std::vector<Int>> binom(p, std::vector<Int>(p, Int(0)));
    for (long i = 0; i < p; ++i) {
        binom[i][0] = 1;
        for (long j = 1; j <= i; ++j)
            binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : Int(0));
    }
    std::optional<Rat> best;
    for (long l = 0; l < p - 1; ++l) {
        Int b = 0;
        for (long i = l; i < p - 1; ++i) b += binom[i][l] * a[i] % pN;
        b %= pN;
        if (b < 0) b += pN;
        if (b == 0) continue;
        long v = 0;
        while (b % p == 0) {
            b /= p;
            ++v;
        }
        Rat cand(Int(l) + Int(v) * (p - 1), Int(p - 1));
        if (!best || cand < *best) best = cand;
    }
    return best;
}

OracleResult newton_polygon_L(const LaurentPolynomial& f, const CharacterSpec& chi,
                              long long budget) {
    const long p = f.p();
    if (p < 3 || !is_prime(p)) throw MathError("oracle requires an odd prime characteristic");
    chi.validate(p);
    DirectSumPolytope P = f.polytope();
    for (int i = 0; i < P.n(); ++i) {
        const auto& seg = P.segments()[i];
        if (!nondegenerate_1d(seg.d, seg.dp, f.axis_coefficient(i, seg.d),
                              f.axis_coefficient(i, -seg.dp), p))
            throw DegenerateError("degenerate face on axis " + std::to_string(i) +
                                  " (d=" + std::to_string(seg.d) +
                                  ", d'=" + std::to_string(seg.dp) + ", p=" + std::to_string(p) +
                                  ")");
    }
    const long degree = static_cast<long>(lattice_volume(P));
    const long m = degree + 2;

    std::vector<Cyclo> sums;
    for (long r = 1; r <= m; ++r) {
        FiniteField F(p, static_cast<int>(r));
        sums.push_back(exp_sum(f, chi, F, budget));
    }
    auto cs = l_polynomial(sums, f.n(), degree);

    OracleResult out;
    out.degree = degree;
    const long base_precision = 4 * degree + 8;
    for (long k = 0; k <= degree; ++k) {
        if (cs[k].is_zero()) {
            out.valuations.emplace_back(std::nullopt);
            continue;
        }
        std::optional<Rat> v;
        for (long mult = 1; mult <= 4; mult *= 2) {
            v = pi_adic_valuation(cs[k], base_precision * mult);
            if (v) break;
        }
        if (!v) throw MathError("insufficient p-adic precision for c_" + std::to_string(k));
        out.valuations.emplace_back(v);
    }

    // lower convex hull of (k, v_k)
    std::vector<std::pair<long, Rat>> pts, hull;
    for (long k = 0; k <= degree; ++k)
        if (out.valuations[k]) pts.emplace_back(k, *out.valuations[k]);
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            const auto& A = hull[hull.size() - 2];
            const auto& B = hull[hull.size() - 1];
            // pop B unless it lies strictly below segment A->pt
            Rat cross = Rat(B.first - A.first) * (pt.second - A.second) -
                        (B.second - A.second) * Rat(pt.first - A.first);
            if (cross > 0) break;
            hull.pop_back();
        }
        hull.push_back(pt);
    }
    std::vector<ConvexPolygon::Run> runs;
    for (std::size_t i = 1; i < hull.size(); ++i) {
        Rat slope = (hull[i].second - hull[i - 1].second) / Rat(hull[i].first - hull[i - 1].first);
        runs.emplace_back(slope, hull[i].first - hull[i - 1].first);
    }
    out.np = ConvexPolygon::from_runs(std::move(runs));

    std::vector<Rat> neg;
    for (const auto& fr : chi.fracs.fracs()) neg.push_back(frac_part(-fr));
    out.hodge_bound = hodge_polygon(P, TwistVector(std::move(neg)));
    out.dominates_bound = dominates(out.np, out.hodge_bound);
    return out;
}

}  // namespace npoly
