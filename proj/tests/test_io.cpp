#include <doctest.h>

#include "npoly/errors.hpp"
#include "npoly/io.hpp"
#include "npoly/rng.hpp"

using namespace npoly;

TEST_CASE("polytope json round trip") {
    Json j = Json::parse(R"({"n": 2,
                             "basis": [[1, 1], [1, -1]],
                             "segments": [{"d": 2, "dp": 1}, {"d": 1, "dp": 0}]})");
    auto P = polytope_from_json(j);
    CHECK(P.n() == 2);
    CHECK(P.segments()[0].d == 2);
    CHECK(P.basis_columns()[1][1] == -1);
    auto j2 = polytope_to_json(P);
    CHECK(polytope_from_json(j2).basis_columns() == P.basis_columns());

    CHECK_THROWS_AS(polytope_from_json(Json::parse(R"({"n": 1})")), ParseError);
    CHECK_THROWS_AS(
        polytope_from_json(Json::parse(
            R"({"n": 1, "basis": [[0]], "segments": [{"d": 1, "dp": 0}]})")),
        ParseError);
}

TEST_CASE("twist parsing") {
    auto t = twist_from_string("1/2,0,2/3");
    CHECK(t.size() == 3);
    CHECK(t.fracs()[2] == Rat(2, 3));
    CHECK(twist_from_json(Json::parse(R"(["1/2", "0"])")).order() == 2);
    CHECK_THROWS_AS(twist_from_string("3/2"), ParseError);
    CHECK_THROWS_AS(twist_from_string("x"), ParseError);
    CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
}

TEST_CASE("laurent json") {
    Json j = Json::parse(
        R"({"p": 5, "n": 1, "terms": [{"exp": [1], "coeff": 1}, {"exp": [-1], "coeff": 7}]})");
    auto f = laurent_from_json(j);
    CHECK(f.terms().at({-1}) == 2);  // reduced mod 5
    auto j2 = laurent_to_json(f);
    CHECK(laurent_from_json(j2).terms() == f.terms());
    CHECK_THROWS_AS(
        laurent_from_json(Json::parse(R"({"p": 5, "n": 1, "terms": []})")), ParseError);
}

TEST_CASE("polygon json round trip") {
    Rng rng(2024);
    for (int t = 0; t < 30; ++t) {
        std::vector<Rat> slopes;
        long len = rng.range(0, 7);
        for (long i = 0; i < len; ++i) slopes.emplace_back(rng.range(-9, 9), rng.range(1, 7));
        auto p = ConvexPolygon::from_slopes(std::move(slopes));
        CHECK(polygon_from_json(polygon_to_json(p)) == p);
    }
    // exact strings in vertices
    auto j = polygon_to_json(ConvexPolygon::from_slopes({Rat(1, 2), Rat(1, 2)}));
    CHECK(j["vertices"][2][1] == "1");
    CHECK(j["slopes"][0][0] == "1/2");
}
