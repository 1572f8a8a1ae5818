#include "comin/engine.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace comin;

TEST_CASE("very ample twist") {
    CHECK(very_ample_twist(1) == 1);
    CHECK(very_ample_twist(2) == 3);
    CHECK(very_ample_twist(6) == 21);
    CHECK_THROWS_AS(very_ample_twist(0), std::invalid_argument);
}

TEST_CASE("smoothness bound") {
    CHECK(smoothness_bound(2, 1) == 2);
    CHECK(smoothness_bound(2, 3) == 2);
    CHECK(smoothness_bound(6, 2) == 150);
    CHECK_THROWS_AS(smoothness_bound(0, 1), std::invalid_argument);
}

TEST_CASE("Gr(2,4) at degree one, by hand") {
    Engine eng;
    BoundReport r = eng.bound(parse_space("Gr(2,4)"), 1);
    CHECK(r.case_id == 1);
    // e = 1^2 * binom(2,1) = 2, term = 2 * 1^2 = 2
    CHECK(r.smoothness_term == 2);
    CHECK(r.index_term == 4);
    CHECK(r.chain_length == 4);
    REQUIRE(r.delta_term.has_value());
    CHECK(*r.delta_term == eng.delta(parse_space("Gr(2,4)"), 4));
    CHECK(r.bound == std::max({r.smoothness_term, r.index_term, *r.delta_term}));
    CHECK(!r.child);
}

TEST_CASE("Lagrangian family dispatches to the doubled twist") {
    Engine eng;
    int d = 2, n = 3;
    BoundReport r = eng.bound(parse_space("LG(3)"), d, true);
    CHECK(r.case_id == 2);
    Int e = int_pow(Int(d) * (d + 1), n - 1);
    CHECK(r.smoothness_term == smoothness_bound(e, n - 1));
    CHECK(r.index_term == n + 1);
    CHECK(r.chain_length == n * (n + 1) / 2);
    CHECK(r.delta_pending);
    CHECK(!r.delta_term.has_value());
}

TEST_CASE("Freudenthal tower at degree one") {
    Engine eng;
    BoundReport r = eng.bound(parse_space("E7"), 1, true);
    CHECK(r.case_id == 3);
    // e = 1^16 * deg(E6) = 78
    CHECK(r.smoothness_term == smoothness_bound(78, 16));
    CHECK(r.index_term == 18);
    CHECK(r.chain_length == 27);
    REQUIRE(r.child);
    CHECK(r.child->space.name == "E6");
    CHECK(r.child->d == 1);  // d(d+1)/2 = 1
    CHECK(r.child->case_id == 3);
    CHECK(r.child->smoothness_term == smoothness_bound(12, 10));  // deg OG(5,10) = 12
    REQUIRE(r.child->child);
    CHECK(r.child->child->space.name == "OG(5)");
    CHECK(r.child->child->case_id == 3);
    REQUIRE(r.child->child->child);
    CHECK(r.child->child->child->space.name == "Gr(2,5)");
    CHECK(r.child->child->child->case_id == 1);
    CHECK(!r.child->child->child->child);
    CHECK(r.tower_bound() >= r.bound);
}

TEST_CASE("quadric towers terminate through the coincidences") {
    Engine eng;
    BoundReport q7 = eng.bound(parse_space("Q(7)"), 1, true);
    CHECK(q7.case_id == 3);
    REQUIRE(q7.child);
    CHECK(q7.child->space.name == "Q(5)");
    REQUIRE(q7.child->child);
    CHECK(q7.child->child->space.name == "LG(2)");
    CHECK(q7.child->child->case_id == 2);
    CHECK(!q7.child->child->child);

    BoundReport q6 = eng.bound(parse_space("Q(6)"), 2, true);
    REQUIRE(q6.child);
    CHECK(q6.child->space.name == "Gr(2,4)");
    CHECK(q6.child->d == 3);
    CHECK(!q6.child->child);
}

TEST_CASE("bounds are monotone in the degree") {
    Engine eng;
    for (const char* name : {"Gr(2,4)", "LG(2)", "Q(5)", "OG(4)"}) {
        SpaceDescriptor s = parse_space(name);
        Int prev = -1;
        for (int d = 1; d <= 5; ++d) {
            BoundReport r = eng.bound(s, d);
            CHECK(r.bound >= prev);
            prev = r.bound;
        }
    }
    // with the delta component skipped the remaining terms stay monotone too
    for (const char* name : {"OG(5)", "E6", "E7"}) {
        SpaceDescriptor s = parse_space(name);
        Int prev = -1;
        for (int d = 1; d <= 5; ++d) {
            BoundReport r = eng.bound(s, d, true);
            CHECK(r.smoothness_term >= prev);
            prev = r.smoothness_term;
        }
    }
}

TEST_CASE("chain-length override") {
    Engine eng;
    BoundReport r = eng.bound(parse_space("Gr(2,4)"), 1, false, 2);
    CHECK(r.chain_length == 2);
    REQUIRE(r.delta_term.has_value());
    CHECK(*r.delta_term == 2);  // delta_{Gr(2,4)}(2)
}

TEST_CASE("degenerate ranks") {
    Engine eng;
    BoundReport p1 = eng.bound(parse_space("Gr(1,2)"), 3);
    CHECK(p1.case_id == 1);
    CHECK(p1.smoothness_term == 1);  // rank one: e = 1 and the exponent is void
    CHECK(p1.index_term == 2);
}
