#include "comin/chains.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace comin;

namespace {

std::shared_ptr<Space> make(const std::string& name) { return Space::create(parse_space(name)); }

}  // namespace

TEST_CASE("multinomial coefficients") {
    CHECK(multinomial(4, {2, 2}) == 6);
    CHECK(multinomial(0, {}) == 1);
    CHECK(multinomial(5, {1, 1, 3}) == 20);
    CHECK(multinomial(3, {0, 3, 0}) == 1);
    CHECK_THROWS_AS(multinomial(4, {2, 1}), std::invalid_argument);
}

TEST_CASE("chain tensors level by level") {
    auto p2 = make("P(2)");
    IncidenceMatrix a = incidence_matrix(*p2);
    ChainTensor t1 = chain_level1(*p2, a);
    ChainTensor t2 = extend_chain(*p2, t1, a);
    // [C] = [X x X], so every level is the single all-fundamental tuple
    REQUIRE(t2.coeff.size() == 1);
    CHECK(t2.coeff.at({p2->xi, p2->xi, p2->xi}) == 1);

    auto g = make("Gr(2,4)");
    IncidenceMatrix ag = incidence_matrix(*g);
    ChainTensor g2 = extend_chain(*g, chain_level1(*g, ag), ag);
    int middles = 0;
    for (const auto& [tup, v] : g2.coeff) {
        int total = 0;
        for (Ideal s : tup) total += g->dim_class(s);
        CHECK(total == 2 * 3 + 4);  // forced by the tensor grading
        if (tup.front() == g->xi && tup.back() == g->xi) {
            CHECK(v == 1);
            CHECK(g->dim_class(tup[1]) == 2);
            ++middles;
        }
    }
    CHECK(middles == 2);  // the two size-2 ideals of the 2x2 grid
}

TEST_CASE("space mismatch is rejected") {
    auto g = make("Gr(2,4)");
    auto q = make("Q(5)");
    ChainTensor t = chain_level1(*g, incidence_matrix(*g));
    CHECK_THROWS_AS(extend_chain(*q, t, incidence_matrix(*q)), std::invalid_argument);
}

TEST_CASE("chain numbers of projective space") {
    for (int n = 1; n <= 6; ++n) {
        auto sp = make("P(" + std::to_string(n) + ")");
        IncidenceMatrix a = incidence_matrix(*sp);
        CHECK(delta_naive(*sp, a, 1) == 1);
        CHECK(delta_transfer(*sp, a, 1).value == 1);
    }
}

TEST_CASE("chain numbers of Gr(2,4)") {
    auto sp = make("Gr(2,4)");
    IncidenceMatrix a = incidence_matrix(*sp);
    // two general planes share no line: d_1 = -1
    CHECK_THROWS_WITH(delta_transfer(*sp, a, 1),
                      Catch::Matchers::ContainsSubstring("= 1*3 - 4 = -1 < 0"));
    // deg(sigma_1^2) = 2
    CHECK(delta_naive(*sp, a, 2) == 2);
    CHECK(delta_transfer(*sp, a, 2).value == 2);
}

TEST_CASE("three-dimensional quadric chains") {
    auto sp = make("Q(3)");
    IncidenceMatrix a = incidence_matrix(*sp);
    // one interior marked point on a hyperplane: [C_x][C_y]H = H^3 = 2
    CHECK(delta_naive(*sp, a, 2) == 2);
    CHECK(delta_transfer(*sp, a, 2).value == 2);
}

TEST_CASE("transfer equals the naive tuple sum on small spaces") {
    for (const char* name : {"P(3)", "Gr(2,4)", "Q(3)", "Q(5)", "LG(3)", "Gr(2,5)", "OG(4)"}) {
        auto sp = make(name);
        IncidenceMatrix a = incidence_matrix(*sp);
        for (int i = 1; i <= sp->dim() + 2; ++i) {
            if (chain_excess(*sp, i) < 0) continue;
            if (chain_excess(*sp, i) > 12) break;
            CAPTURE(name, i);
            CHECK(delta_naive(*sp, a, i) == delta_transfer(*sp, a, i).value);
        }
    }
}

TEST_CASE("chains dominate X x X from the connecting length onward") {
    for (const char* name : {"P(4)", "Gr(2,4)", "Gr(2,5)", "Q(5)", "Q(6)", "LG(3)", "OG(5)"}) {
        auto sp = make(name);
        IncidenceMatrix a = incidence_matrix(*sp);
        for (int i = sp->desc.r; i <= sp->desc.r + 2; ++i) {
            if (chain_excess(*sp, i) < 0) continue;
            CAPTURE(name, i);
            CHECK(delta_transfer(*sp, a, i).value >= 1);
        }
    }
}

TEST_CASE("truncation is lossless and threads do not change results") {
    for (const char* name : {"Gr(2,5)", "LG(3)"}) {
        auto sp = make(name);
        IncidenceMatrix a = incidence_matrix(*sp);
        int i = sp->desc.r + 1;
        unsigned d = static_cast<unsigned>(chain_excess(*sp, i));
        Int base = delta_transfer(*sp, a, i).value;
        CHECK(delta_transfer(*sp, a, i, 1, d + 7).value == base);
        CHECK(delta_transfer(*sp, a, i, 2).value == base);
        CHECK(delta_transfer(*sp, a, i, 4).value == base);
    }
}

TEST_CASE("cost model shape") {
    auto sp = make("E6");
    IncidenceMatrix a = incidence_matrix(*sp);
    TransferCostModel m = transfer_cost_model(*sp, a, 16);
    CHECK(m.basis_size == 27);
    CHECK(m.d == 16 * 11 - 16);
    CHECK(m.steps == 15);
    CHECK(m.structure_terms > 0);
    CHECK(m.coefficient_ops == m.structure_terms * 15ull * (16ull * 11 - 16 + 1));
}
