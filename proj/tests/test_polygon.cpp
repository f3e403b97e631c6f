#include <doctest.h>

#include "npoly/errors.hpp"
#include "npoly/polygon.hpp"
#include "npoly/rng.hpp"

using namespace npoly;

namespace {

ConvexPolygon poly(std::vector<std::string> slopes) {
    std::vector<Rat> v;
    for (const auto& s : slopes) v.push_back(parse_rat(s));
    return ConvexPolygon::from_slopes(std::move(v));
}

// independent oracle: expand, sum pairwise, sort
ConvexPolygon product_by_enumeration(const ConvexPolygon& a, const ConvexPolygon& b) {
    std::vector<Rat> out;
    for (const auto& sa : a.slopes())
        for (const auto& sb : b.slopes()) out.push_back(sa + sb);
    return ConvexPolygon::from_slopes(std::move(out));
}

ConvexPolygon random_poly(Rng& rng, long max_len) {
    std::vector<Rat> v;
    const long len = rng.range(0, max_len);
    for (long i = 0; i < len; ++i) v.emplace_back(rng.range(-8, 12), rng.range(1, 6));
    return ConvexPolygon::from_slopes(std::move(v));
}

}  // namespace

TEST_CASE("polygon product") {
    CHECK(product(poly({"0", "1/2"}), poly({"0", "1/2"})) == poly({"0", "1/2", "1/2", "1"}));
    ConvexPolygon a = poly({"0", "1/2"}), b = poly({"0", "1/3", "2/3"});
    ConvexPolygon expected = poly({"0", "1/3", "1/2", "2/3", "5/6", "7/6"});
    CHECK(product(a, b) == expected);
    CHECK(product_by_enumeration(a, b) == expected);
    CHECK(product(a, ConvexPolygon()).empty());
    CHECK(product(ConvexPolygon(), b).empty());
}

TEST_CASE("polygon juxtapose") {
    CHECK(juxtapose(poly({"0", "1"}), poly({"1/2", "1/2"})) == poly({"0", "1/2", "1/2", "1"}));
    ConvexPolygon c = poly({"0", "1/3", "2/3"});
    CHECK(juxtapose(c, ConvexPolygon()) == c);
    CHECK(juxtapose(c, c) == poly({"0", "0", "1/3", "1/3", "2/3", "2/3"}));
}

TEST_CASE("polygon average") {
    CHECK(average({poly({"0", "1"})}) == poly({"0", "1"}));
    CHECK(average({poly({"0", "1"}), poly({"1/2", "1/2"})}) == poly({"1/4", "3/4"}));
    CHECK_THROWS_AS(average({poly({"0", "1"}), poly({"0"})}), MathError);
    // the invariant-violating operand {1,0} cannot even be constructed
    CHECK(poly({"1", "0"}) == poly({"0", "1"}));
}

TEST_CASE("polygon dominates") {
    ConvexPolygon p = poly({"0", "1/2", "1"});
    CHECK(dominates(p, p));
    CHECK(dominates(poly({"0", "1/2", "1/2", "1"}), poly({"0", "1/3", "2/3", "1"})));
    // interior 0 < 1/2, so {0,1} is not above the chord {1/2,1/2}
    CHECK_FALSE(dominates(poly({"0", "1"}), poly({"1/2", "1/2"})));
    CHECK_THROWS_AS(dominates(poly({"0"}), poly({"0", "1"})), MathError);
}

TEST_CASE("polygon vertices") {
    auto v = poly({"0", "1/2", "1"}).vertices();
    REQUIRE(v.size() == 4);
    CHECK(v[0] == std::pair<long, Rat>{0, Rat(0)});
    CHECK(v[1] == std::pair<long, Rat>{1, Rat(0)});
    CHECK(v[2] == std::pair<long, Rat>{2, Rat(1, 2)});
    CHECK(v[3] == std::pair<long, Rat>{3, Rat(3, 2)});
    CHECK(ConvexPolygon().vertices() == std::vector<std::pair<long, Rat>>{{0, Rat(0)}});
    auto w = poly({"1/2", "1/2"}).vertices();
    CHECK(w.back() == std::pair<long, Rat>{2, Rat(1)});
}

TEST_CASE("polygon max_deviation") {
    ConvexPolygon p = poly({"0", "1/2", "1"});
    CHECK(max_deviation(p, p) == 0);
    CHECK(max_deviation(p, poly({"0", "1/3", "2/3"})) == Rat(1, 2));
}

TEST_CASE("polygon algebra properties") {
    Rng rng(12345);
    for (int t = 0; t < 60; ++t) {
        ConvexPolygon a = random_poly(rng, 5), b = random_poly(rng, 5);
        CHECK(product(a, b) == product(b, a));
        CHECK(product(a, b) == product_by_enumeration(a, b));
        CHECK(product(a, b).length() == a.length() * b.length());
        CHECK(juxtapose(a, b).length() == a.length() + b.length());
        if (!a.empty()) CHECK(average({a, a, a}) == a);
    }
}
