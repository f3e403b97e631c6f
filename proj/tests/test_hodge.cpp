#include <doctest.h>

#include "npoly/errors.hpp"
#include "npoly/hodge.hpp"
#include "npoly/rng.hpp"

using namespace npoly;

namespace {

ConvexPolygon poly(std::vector<std::string> slopes) {
    std::vector<Rat> v;
    for (const auto& s : slopes) v.push_back(parse_rat(s));
    return ConvexPolygon::from_slopes(std::move(v));
}

}  // namespace

TEST_CASE("graded dimensions") {
    auto P = DirectSumPolytope::segment(2, 0);
    auto dims = graded_dims(P, TwistVector::zero(1), 4);
    CHECK(dims[0] == 1);
    CHECK(dims[1] == 1);
    CHECK(dims[2] == 1);

    auto Q = DirectSumPolytope::segment(1, 1);
    auto dq = graded_dims(Q, TwistVector({Rat(1, 2)}), 4);
    CHECK(dq[1] == 2);  // weight 1/2: the points +-1/2
    CHECK(dq[3] == 2);  // weight 3/2
    CHECK(dq.count(0) == 0);
    CHECK(dq.count(2) == 0);

    auto R = direct_sum(DirectSumPolytope::segment(2, 0), DirectSumPolytope::segment(3, 0));
    auto dr = graded_dims(R, TwistVector::zero(2), 0);
    CHECK(dr[0] == 1);
}

TEST_CASE("poincare polynomial") {
    auto pp = poincare_polynomial(DirectSumPolytope::segment(2, 0), TwistVector::zero(1));
    CHECK(pp.D == 2);
    CHECK(pp.coeffs == std::vector<Int>{Int(1), Int(1), Int(0)});

    auto sq = direct_sum(DirectSumPolytope::segment(2, 0), DirectSumPolytope::segment(2, 0));
    auto pp2 = poincare_polynomial(sq, TwistVector::zero(2));
    CHECK(pp2.D == 2);
    CHECK(pp2.coeffs == std::vector<Int>{Int(1), Int(2), Int(1), Int(0), Int(0)});

    auto pp3 = poincare_polynomial(DirectSumPolytope::segment(1, 1), TwistVector({Rat(1, 2)}));
    CHECK(pp3.D == 2);
    CHECK(pp3.coeffs == std::vector<Int>{Int(0), Int(2), Int(0)});

    CHECK(pp3.total() == lattice_volume(DirectSumPolytope::segment(1, 1)));
}

TEST_CASE("hodge polygon") {
    CHECK(hodge_polygon(DirectSumPolytope::segment(2, 1)) == poly({"0", "1/2", "1"}));
    CHECK(hodge_polygon(DirectSumPolytope::segment(1, 1), TwistVector({Rat(1, 2)})) ==
          poly({"1/2", "1/2"}));
    auto R = direct_sum(DirectSumPolytope::segment(2, 0), DirectSumPolytope::segment(3, 0));
    CHECK(hodge_polygon(R) == poly({"0", "1/3", "1/2", "2/3", "5/6", "7/6"}));
}

TEST_CASE("hodge product identities") {
    Rng rng(3);
    for (int t = 0; t < 25; ++t) {
        Segment1D s1{rng.range(0, 4), rng.range(1, 4)};
        Segment1D s2{rng.range(1, 4), rng.range(0, 4)};
        auto A = DirectSumPolytope::standard({s1});
        auto B = DirectSumPolytope::standard({s2});
        CHECK(hodge_polygon(direct_sum(A, B)) == product(hodge_polygon(A), hodge_polygon(B)));
        Rat t1(rng.below(4), 4), t2(rng.below(3), 3);
        CHECK(hodge_polygon(direct_sum(A, B), TwistVector({t1, t2})) ==
              product(hodge_polygon(A, TwistVector({t1})), hodge_polygon(B, TwistVector({t2}))));
    }
}

TEST_CASE("lambda stickelberger") {
    CHECK(lambda_stickelberger(1, 3, 2) == Rat(1, 2));
    CHECK(lambda_stickelberger(1, 3, 1) == Rat(1, 3));
    CHECK(lambda_stickelberger(0, 5, 2) == 0);
    CHECK_THROWS_AS(lambda_stickelberger(1, 4, 2), MathError);

    CHECK(lambda_digit_sum(1, 3, 7) == Rat(1, 3));   // 7 = 1 mod 3
    CHECK(lambda_digit_sum(1, 3, 5) == Rat(1, 2));   // 5 = 2 mod 3, q' = 25, s_5(8) = 4
    CHECK(lambda_digit_sum(1, 2, 3) == Rat(1, 2));
}

TEST_CASE("hs polygon and closed form") {
    auto seg01 = DirectSumPolytope::segment(1, 0);
    CHECK(hs_polygon(seg01, TwistVector({Rat(1, 2)}), 1) == poly({"1/2"}));
    // Stickelberger orientation: chi = omega^{(p-1)/3} has Gauss-sum valuation 2/3
    CHECK(hs_polygon(seg01, TwistVector({Rat(1, 3)}), 1) == poly({"2/3"}));
    CHECK(hs_polygon(seg01, TwistVector({Rat(2, 3)}), 1) == poly({"1/3"}));

    CHECK(hs_polygon(DirectSumPolytope::segment(1, 1), TwistVector({Rat(1, 2)}), 3) ==
          poly({"1/2", "1/2"}));

    // orbit of length two, cross-checked against the closed form
    CHECK(hs_polygon(DirectSumPolytope::segment(3, 2), TwistVector({Rat(1, 3)}), 2) ==
          hs_1d_closed_form(3, 2, 1, 3, 2));
    // lambda = 1/2 here, so the list is (j - 1/2)/3 and (j + 1/2)/2
    CHECK(hs_1d_closed_form(3, 2, 1, 3, 2) == poly({"1/6", "1/4", "1/2", "3/4", "5/6"}));

    CHECK(hs_1d_closed_form(1, 0, 1, 2, 1) == poly({"1/2"}));
    CHECK(hs_1d_closed_form(2, 1, 1, 2, 1) == poly({"1/4", "1/2", "3/4"}));
    // r = 0 routes to the untwisted list
    CHECK(hs_1d_closed_form(3, 0, 0, 1, 1) == poly({"0", "1/3", "2/3"}));

    // prime re-derivation
    CHECK(hs_polygon_via_prime(DirectSumPolytope::segment(3, 2), TwistVector({Rat(1, 3)}), 5) ==
          hs_polygon(DirectSumPolytope::segment(3, 2), TwistVector({Rat(1, 3)}), 2));
    CHECK(hs_polygon_via_prime(seg01, TwistVector({Rat(1, 3)}), 7) ==
          hs_polygon(seg01, TwistVector({Rat(1, 3)}), 1));
}

TEST_CASE("decH decomposition") {
    // M = (2), segments (1,1): HP([-2,2]) = {0,1} juxtaposed with {1/2,1/2}
    DirectSumPolytope P({{Int(2)}}, {Segment1D{1, 1}});
    auto [hp0, parts] = dec_h_decomposition(P);
    CHECK(hp0 == poly({"0", "1"}));
    REQUIRE(parts.size() == 1);
    CHECK(parts[0] == poly({"1/2", "1/2"}));
    CHECK(hodge_polygon(P) == poly({"0", "1/2", "1/2", "1"}));

    // identity basis: trivial decomposition
    auto Q = DirectSumPolytope::segment(2, 1);
    auto [hq, qparts] = dec_h_decomposition(Q);
    CHECK(qparts.empty());
    CHECK(hq == hodge_polygon(Q));

    // 2-d example with |det| = 2
    DirectSumPolytope R({{Int(1), Int(1)}, {Int(1), Int(-1)}}, {Segment1D{1, 0}, Segment1D{1, 0}});
    auto [hr, rparts] = dec_h_decomposition(R);
    ConvexPolygon joined = hr;
    for (const auto& part : rparts) joined = juxtapose(joined, part);
    CHECK(joined == hodge_polygon(R));
    CHECK(rparts.size() == 1);
}

TEST_CASE("hs mixed-component polytopes") {
    // one twisted axis, one untwisted
    auto A = DirectSumPolytope::segment(1, 0);
    auto B = DirectSumPolytope::segment(2, 0);
    auto AB = direct_sum(A, B);
    auto hs2 = hs_polygon(AB, TwistVector({Rat(1, 3), Rat(0)}), 2);
    auto expect = product(hs_polygon(A, TwistVector({Rat(1, 3)}), 2),
                          hodge_polygon(B));
    CHECK(hs2 == expect);
}
