#include <doctest.h>

#include "npoly/errors.hpp"
#include "npoly/gnp.hpp"
#include "npoly/lfunction.hpp"
#include "npoly/rng.hpp"
#include "npoly/verify.hpp"

using namespace npoly;

namespace {

ConvexPolygon poly(std::vector<std::string> slopes) {
    std::vector<Rat> v;
    for (const auto& s : slopes) v.push_back(parse_rat(s));
    return ConvexPolygon::from_slopes(std::move(v));
}

LaurentPolynomial make_poly(long p, std::map<long, long> coeffs) {
    std::map<std::vector<long>, long> terms;
    for (auto [e, c] : coeffs) terms[{e}] = c;
    return LaurentPolynomial(p, 1, std::move(terms));
}

constexpr long long kBudget = 10000000;

}  // namespace

TEST_CASE("finite field construction") {
    FiniteField f5(5, 1);
    CHECK(f5.order() == 5);
    CHECK(f5.base_generator() == 2);
    // x generates and trace is the identity on F_p
    CHECK(f5.trace(f5.one()) == 1);
    CHECK(f5.pow(f5.x(), 4) == f5.one());
    CHECK(f5.pow(f5.x(), 2) != f5.one());

    FiniteField f9(3, 2);
    CHECK(f9.order() == 9);
    // norm of the generator: x^{(9-1)/(3-1)} = x^4 is a scalar generator of F_3^x
    CHECK(f9.pow(f9.x(), 8) == f9.one());
    CHECK(f9.pow(f9.x(), 4) != f9.one());
    // trace of 1 is r * 1 = 2 mod 3
    CHECK(f9.trace(f9.one()) == 2);

    FiniteField f25(5, 2);
    // Tr(a) = a + a^5, a scalar; its vector form is (a[0]+frob[0], 0)
    auto a = f25.pow(f25.x(), 3);
    auto frob = f25.pow(a, 5);
    CHECK((a[1] + frob[1]) % 5 == 0);
    CHECK(f25.trace(a) == ((a[0] + frob[0]) % 5));
}

TEST_CASE("exp_sum of x is -1 in every degree") {
    auto f = make_poly(5, {{1, 1}});
    CharacterSpec triv = CharacterSpec::trivial(1);
    for (int r = 1; r <= 3; ++r) {
        FiniteField F(5, r);
        Cyclo s = exp_sum(f, triv, F, kBudget);
        CHECK(s.coord(0, 0) == Rat(-1));
        bool rest_zero = true;
        for (int i = 1; i < 4; ++i)
            if (s.coord(i, 0) != 0) rest_zero = false;
        CHECK(rest_zero);
    }
}

TEST_CASE("gauss sum valuation is 1/2") {
    auto f = make_poly(5, {{1, 1}});
    CharacterSpec quad{TwistVector({Rat(1, 2)})};
    FiniteField F(5, 1);
    Cyclo g = exp_sum(f, quad, F, kBudget);
    auto v = pi_adic_valuation(g, 40);
    REQUIRE(v.has_value());
    CHECK(*v == Rat(1, 2));
}

TEST_CASE("factored and full-torus sums agree") {
    Rng rng(17);
    CharacterSpec chis[] = {CharacterSpec::trivial(2),
                            CharacterSpec{TwistVector({Rat(1, 2), Rat(0)})}};
    for (int t = 0; t < 4; ++t) {
        std::map<std::vector<long>, long> terms;
        terms[{rng.range(1, 2), 0}] = rng.range(1, 2);
        terms[{-rng.range(1, 2), 0}] = rng.range(1, 2);
        terms[{0, rng.range(1, 2)}] = rng.range(1, 2);
        LaurentPolynomial f(3, 2, terms);
        for (const auto& chi : chis)
            for (int r = 1; r <= 2; ++r) {
                FiniteField F(3, r);
                Cyclo a = exp_sum(f, chi, F, kBudget);
                Cyclo b = exp_sum_full_torus(f, chi, F, kBudget);
                bool equal = true;
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < a.phi(); ++j)
                        if (a.coord(i, j) != b.coord(i, j)) equal = false;
                CHECK(equal);
            }
    }
}

TEST_CASE("l_polynomial of constant sums") {
    // S_r = -1 for all r gives exp(-sum T^r/r) = 1 - T
    std::vector<Cyclo> sums;
    for (int r = 0; r < 3; ++r) sums.push_back(Cyclo::integer(5, 1, Rat(-1)));
    auto c = l_polynomial(sums, 1, 1);
    REQUIRE(c.size() == 2);
    CHECK(c[0].coord(0, 0) == 1);
    CHECK(c[1].coord(0, 0) == -1);
}

TEST_CASE("pi-adic valuation basics") {
    CHECK(*pi_adic_valuation(Cyclo::integer(5, 1, Rat(5)), 30) == 1);
    CHECK(*pi_adic_valuation(Cyclo::integer(5, 1, Rat(50)), 30) == 2);
    // zeta_p - 1 is the uniformizer
    std::vector<std::vector<long long>> counts(5, std::vector<long long>(1, 0));
    counts[1][0] = 1;  // zeta_5
    counts[0][0] = -1;
    Cyclo u = Cyclo::from_root_counts(5, 1, counts);
    CHECK(*pi_adic_valuation(u, 30) == Rat(1, 4));
    CHECK_FALSE(pi_adic_valuation(Cyclo(5, 1), 30).has_value());
}

TEST_CASE("newton polygon oracle: basic shapes") {
    CharacterSpec triv = CharacterSpec::trivial(1);

    auto fx = make_poly(5, {{1, 1}});
    auto r1 = newton_polygon_L(fx, triv, kBudget);
    CHECK(r1.np == poly({"0"}));
    CHECK(r1.np == r1.hodge_bound);
    CHECK(r1.dominates_bound);

    // Kloosterman: ordinary for every p
    for (long p : {3L, 5L, 7L}) {
        auto kl = make_poly(p, {{1, 1}, {-1, 1}});
        auto r = newton_polygon_L(kl, triv, kBudget);
        CHECK(r.np == poly({"0", "1"}));
        CHECK(r.dominates_bound);
    }

    // quadratic on [0,2]: p = 1 mod 2 always, so NP = HP generically
    auto fq = make_poly(5, {{2, 1}, {1, 1}});
    auto rq = newton_polygon_L(fq, triv, kBudget);
    CHECK(rq.np == poly({"0", "1/2"}));
}

TEST_CASE("newton polygon oracle: twisted") {
    // NP(x, omega^{(p-1)/3}) = Gauss sum with Stickelberger valuation 2/3
    auto fx = make_poly(7, {{1, 1}});
    CharacterSpec cubic{TwistVector({Rat(1, 3)})};
    auto r = newton_polygon_L(fx, cubic, kBudget);
    CHECK(r.np == poly({"2/3"}));
    CHECK(r.np == r.hodge_bound);
    CHECK(r.dominates_bound);
}

TEST_CASE("poisson decomposition, one instance") {
    Rng rng(5);
    auto f = verify::random_laurent_1d(rng, 5, 1, 1);
    auto f2 = [&f]() {
        std::map<std::vector<long>, long> terms;
        for (auto& [e, c] : f.terms()) terms[{2 * e[0]}] = c;
        return LaurentPolynomial(5, 1, terms);
    }();
    CharacterSpec triv = CharacterSpec::trivial(1);
    CharacterSpec quad{TwistVector({Rat(1, 2)})};
    auto lhs = newton_polygon_L(f2, triv, kBudget).np;
    auto rhs = juxtapose(newton_polygon_L(f, triv, kBudget).np,
                         newton_polygon_L(f, quad, kBudget).np);
    CHECK(lhs == rhs);
}

TEST_CASE("oracle rejects bad input") {
    CharacterSpec triv = CharacterSpec::trivial(1);
    // p | d on the leading face
    CHECK_THROWS_AS(newton_polygon_L(make_poly(3, {{3, 1}}), triv, kBudget), DegenerateError);
    // mixed-variable term
    std::map<std::vector<long>, long> terms{{{1, 1}, 1}};
    CHECK_THROWS_AS(LaurentPolynomial(5, 2, terms).polytope(), MathError);
    // budget
    CHECK_THROWS_AS(newton_polygon_L(make_poly(5, {{1, 1}, {-1, 1}}), triv, 3), BudgetError);
    // character order must divide p-1
    CharacterSpec bad{TwistVector({Rat(1, 3)})};
    CHECK_THROWS_AS(newton_polygon_L(make_poly(5, {{1, 1}}), bad, kBudget), MathError);
}

TEST_CASE("degree checks catch degenerate input") {
    // f = x^2 + 2x + 1/x over F_5 is fine; force degeneracy via p | d instead,
    // which the face check rejects before any enumeration
    CHECK_THROWS_AS(newton_polygon_L(make_poly(5, {{5, 1}, {1, 1}}), CharacterSpec::trivial(1),
                                     kBudget),
                    DegenerateError);
}
