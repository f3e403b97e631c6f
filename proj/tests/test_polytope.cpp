#include <doctest.h>

#include "npoly/errors.hpp"
#include "npoly/polytope.hpp"
#include "npoly/rng.hpp"

using namespace npoly;

namespace {

DirectSumPolytope from_cols(std::vector<std::vector<long>> cols, std::vector<Segment1D> segs) {
    std::vector<std::vector<Int>> basis;
    for (const auto& c : cols) basis.emplace_back(c.begin(), c.end());
    return DirectSumPolytope(std::move(basis), std::move(segs));
}

}  // namespace

TEST_CASE("direct_sum assembles blocks") {
    auto a = DirectSumPolytope::segment(2, 0);
    auto b = DirectSumPolytope::segment(2, 0);
    auto s = direct_sum(a, b);
    CHECK(s.n() == 2);
    CHECK(s.identity_basis());
    CHECK(s.segments()[0].d == 2);
    CHECK(s.segments()[1].d == 2);

    auto t = direct_sum(DirectSumPolytope::segment(2, 1), DirectSumPolytope::segment(1, 3));
    CHECK(t.segments()[0].d == 2);
    CHECK(t.segments()[0].dp == 1);
    CHECK(t.segments()[1].d == 1);
    CHECK(t.segments()[1].dp == 3);
    CHECK(lattice_volume(t) == lattice_volume(DirectSumPolytope::segment(2, 1)) *
                                   lattice_volume(DirectSumPolytope::segment(1, 3)));
}

TEST_CASE("weight") {
    // [-3,2]: w(5) = max(5/2, -5/3) = 5/2
    auto P = DirectSumPolytope::segment(2, 3);
    CHECK(*weight(P, {Rat(5)}) == Rat(5, 2));
    auto Q = direct_sum(DirectSumPolytope::segment(2, 0), DirectSumPolytope::segment(3, 0));
    CHECK(*weight(Q, {Rat(1), Rat(2)}) == Rat(7, 6));
    CHECK_FALSE(weight(DirectSumPolytope::segment(2, 0), {Rat(-1)}).has_value());

    // positive homogeneity and additivity across the sum
    Rng rng(7);
    for (int t = 0; t < 40; ++t) {
        Rat u(rng.range(-12, 12), rng.range(1, 4));
        Rat v(rng.range(-12, 12), rng.range(1, 4));
        auto A = DirectSumPolytope::segment(rng.range(1, 4), rng.range(0, 4));
        auto B = DirectSumPolytope::segment(rng.range(0, 3) == 0 ? 0 : rng.range(1, 4),
                                            rng.range(1, 4));
        auto wa = weight(A, {u}), wb = weight(B, {v});
        auto wab = weight(direct_sum(A, B), {u, v});
        if (wa && wb) {
            REQUIRE(wab.has_value());
            CHECK(*wab == *wa + *wb);
            Rat lambda(rng.range(1, 5), rng.range(1, 3));
            CHECK(*weight(A, {lambda * u}) == lambda * *wa);
        } else {
            CHECK_FALSE(wab.has_value());
        }
    }
}

TEST_CASE("denominator") {
    CHECK(denominator(DirectSumPolytope::segment(2, 1), TwistVector::zero(1)) == 2);
    CHECK(denominator(DirectSumPolytope::segment(1, 1), TwistVector({Rat(1, 2)})) == 2);
    auto Q = direct_sum(DirectSumPolytope::segment(2, 0), DirectSumPolytope::segment(3, 0));
    CHECK(denominator(Q, TwistVector::zero(2)) == 6);

    // lcm across a direct sum
    Rng rng(11);
    for (int t = 0; t < 30; ++t) {
        auto A = DirectSumPolytope::segment(rng.range(1, 5), rng.range(0, 5));
        auto B = DirectSumPolytope::segment(rng.range(1, 5), rng.range(0, 5));
        long da = denominator(A, TwistVector::zero(1));
        long db = denominator(B, TwistVector::zero(1));
        CHECK(denominator(direct_sum(A, B), TwistVector::zero(2)) == std::lcm(da, db));
    }
}

TEST_CASE("lattice_volume") {
    CHECK(lattice_volume(DirectSumPolytope::segment(2, 1)) == 3);
    auto Q = direct_sum(DirectSumPolytope::segment(2, 0), DirectSumPolytope::segment(3, 0));
    CHECK(lattice_volume(Q) == 6);
    CHECK(lattice_volume(from_cols({{2}}, {{1, 1}})) == 4);
}

TEST_CASE("smith divisors and epsilon set") {
    CHECK(smith_divisors({{Int(2)}}) == std::vector<Int>{Int(2)});
    auto div = smith_divisors({{Int(1), Int(1)}, {Int(1), Int(-1)}});
    CHECK(div == std::vector<Int>{Int(1), Int(2)});

    auto e1 = epsilon_set({{Int(2)}});
    CHECK(e1 == std::vector<std::vector<int>>{{0}, {1}});
    auto e2 = epsilon_set({{Int(1), Int(0)}, {Int(0), Int(1)}});
    CHECK(e2 == std::vector<std::vector<int>>{{0, 0}});
    // columns f_1 = (1,1), f_2 = (1,-1)
    auto e3 = epsilon_set({{Int(1), Int(1)}, {Int(1), Int(-1)}});
    CHECK(e3 == std::vector<std::vector<int>>{{0, 0}, {1, 1}});
    CHECK_THROWS_AS(epsilon_set({{Int(3)}}), MathError);
    CHECK_THROWS_AS(epsilon_set({{Int(4)}}), MathError);

    // |E| = |det M| for exponent-2 bases
    CHECK(e3.size() == 2);
}

TEST_CASE("half points") {
    auto e = epsilon_set({{Int(2)}});
    auto pts = half_points({{Int(2)}}, e);
    REQUIRE(pts.size() == 2);
    CHECK(pts[0] == std::vector<Int>{Int(0)});
    CHECK(pts[1] == std::vector<Int>{Int(1)});

    auto cols = std::vector<std::vector<Int>>{{Int(1), Int(1)}, {Int(1), Int(-1)}};
    auto pts2 = half_points(cols, epsilon_set(cols));
    REQUIRE(pts2.size() == 2);
    CHECK(pts2[1] == std::vector<Int>{Int(1), Int(0)});
    // distinct points
    CHECK(pts2[0] != pts2[1]);
}

TEST_CASE("nondegenerate_1d") {
    CHECK(nondegenerate_1d(3, 0, 1, 0, 5));
    CHECK_FALSE(nondegenerate_1d(3, 0, 1, 0, 3));
    CHECK(nondegenerate_1d(2, 1, 1, 1, 7));
    CHECK_FALSE(nondegenerate_1d(2, 1, 1, 0, 7));  // vanishing pole-side coefficient
    CHECK_FALSE(nondegenerate_1d(2, 1, 7, 1, 7));  // leading coefficient zero mod p
}

TEST_CASE("polytope invariants rejected") {
    CHECK_THROWS_AS(DirectSumPolytope::standard({Segment1D{0, 0}}), MathError);
    CHECK_THROWS_AS(from_cols({{1, 1}, {1, 1}}, {{1, 0}, {1, 0}}), MathError);  // singular
    CHECK_THROWS_AS(TwistVector({Rat(3, 2)}), MathError);
}
