#include "comin/root_system.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace comin;

TEST_CASE("positive root counts match the classical formulas") {
    CHECK(RootSystem::build(TypeLabel::A, 3).num_positive() == 6);
    CHECK(RootSystem::build(TypeLabel::A, 7).num_positive() == 28);
    CHECK(RootSystem::build(TypeLabel::B, 4).num_positive() == 16);
    CHECK(RootSystem::build(TypeLabel::C, 3).num_positive() == 9);
    CHECK(RootSystem::build(TypeLabel::D, 5).num_positive() == 20);
    CHECK(RootSystem::build(TypeLabel::E6, 6).num_positive() == 36);
    // derived by closing the simple roots under root addition
    CHECK(RootSystem::build(TypeLabel::E7, 7).num_positive() == 63);
}

TEST_CASE("inadmissible type/rank pairs are rejected") {
    CHECK_THROWS_AS(RootSystem::build(TypeLabel::D, 2), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem::build(TypeLabel::B, 1), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem::build(TypeLabel::E6, 5), std::invalid_argument);
}

TEST_CASE("cartan matrix invariants") {
    for (auto [t, r] : {std::pair{TypeLabel::A, 4}, {TypeLabel::B, 3}, {TypeLabel::C, 3},
                        {TypeLabel::D, 4}, {TypeLabel::E6, 6}, {TypeLabel::E7, 7}}) {
        RootSystem rs = RootSystem::build(t, r);
        for (int i = 0; i < rs.rank; ++i) {
            CHECK(rs.cartan[i][i] == 2);
            for (int j = 0; j < rs.rank; ++j)
                if (i != j) CHECK(rs.cartan[i][j] <= 0);
        }
    }
}

TEST_CASE("fundamental weight pairings on A_3") {
    RootSystem rs = RootSystem::build(TypeLabel::A, 3);
    CHECK(rs.pairing(rs.fundamental_weights[0], 0) == 1);
    CHECK(rs.pairing(rs.fundamental_weights[0], 1) == 0);
    // highest root alpha_1+alpha_2+alpha_3 expanded against the Cartan matrix
    const Root& theta = rs.highest_root();
    CHECK(theta.rc == std::vector<int>{1, 1, 1});
    CHECK(rs.pair_simple_coroot(theta.rc, 0) == 1);
    CHECK(rs.pair_simple_coroot(theta.rc, 1) == 0);
    CHECK(rs.pair_simple_coroot(theta.rc, 2) == 1);
}

TEST_CASE("pairing is bilinear over the weight lattice") {
    RootSystem rs = RootSystem::build(TypeLabel::C, 3);
    for (int i = 0; i < rs.rank; ++i)
        for (int j = 0; j < rs.rank; ++j)
            for (int k = 0; k < rs.rank; ++k) {
                std::vector<Rat> sum(rs.fundamental_weights[i].size());
                for (size_t c = 0; c < sum.size(); ++c)
                    sum[c] = rs.fundamental_weights[i][c] + 3 * rs.fundamental_weights[j][c];
                CHECK(rs.pairing(sum, k) == rs.pairing(rs.fundamental_weights[i], k) +
                                                3 * rs.pairing(rs.fundamental_weights[j], k));
            }
}

TEST_CASE("cominuscule nodes have highest-root coefficient 1, others at least 2") {
    struct Case {
        TypeLabel t;
        int rank;
        std::vector<int> nodes;  // 0-based cominuscule nodes
    };
    for (const Case& c : {Case{TypeLabel::A, 5, {0, 1, 2, 3, 4}}, Case{TypeLabel::B, 4, {0}},
                          Case{TypeLabel::C, 4, {3}}, Case{TypeLabel::D, 5, {0, 3, 4}},
                          Case{TypeLabel::E6, 6, {0, 5}}, Case{TypeLabel::E7, 7, {6}}}) {
        RootSystem rs = RootSystem::build(c.t, c.rank);
        const Root& theta = rs.highest_root();
        for (int i = 0; i < rs.rank; ++i) {
            bool comin = std::find(c.nodes.begin(), c.nodes.end(), i) != c.nodes.end();
            CHECK(rs.is_cominuscule_node(i) == comin);
            if (comin)
                CHECK(theta.rc[i] == 1);
            else
                CHECK(theta.rc[i] >= 2);
        }
    }
}

TEST_CASE("Fano index values from the table") {
    // Gr(i, n+1) has index n+1
    for (int n = 1; n <= 6; ++n) {
        RootSystem rs = RootSystem::build(TypeLabel::A, n);
        for (int i = 0; i < n; ++i) CHECK(rs.index_of(i) == n + 1);
    }
    // odd quadric Q^{2n-1}: index 2n-1
    CHECK(RootSystem::build(TypeLabel::B, 3).index_of(0) == 5);
    // LG(n,2n): index n+1
    CHECK(RootSystem::build(TypeLabel::C, 3).index_of(2) == 4);
    // OG(n,2n) and the even quadric: index 2n-2
    CHECK(RootSystem::build(TypeLabel::D, 5).index_of(4) == 8);
    CHECK(RootSystem::build(TypeLabel::D, 5).index_of(0) == 8);
    CHECK(RootSystem::build(TypeLabel::E6, 6).index_of(5) == 12);
    CHECK(RootSystem::build(TypeLabel::E7, 7).index_of(6) == 18);
    CHECK_THROWS_AS(RootSystem::build(TypeLabel::E7, 7).index_of(0), std::invalid_argument);
}

TEST_CASE("dimension of G/P from the root counts") {
    CHECK(RootSystem::build(TypeLabel::A, 3).dim_of(1) == 4);     // Gr(2,4)
    CHECK(RootSystem::build(TypeLabel::B, 3).dim_of(0) == 5);     // Q^5
    CHECK(RootSystem::build(TypeLabel::C, 3).dim_of(2) == 6);     // LG(3,6)
    CHECK(RootSystem::build(TypeLabel::D, 5).dim_of(4) == 10);    // OG(5,10)
    CHECK(RootSystem::build(TypeLabel::E6, 6).dim_of(5) == 16);
    CHECK(RootSystem::build(TypeLabel::E7, 7).dim_of(6) == 27);
}

TEST_CASE("weyl group machinery") {
    RootSystem rs = RootSystem::build(TypeLabel::A, 3);
    WeylGroup W(rs);
    CHECK(W.length(W.identity()) == 0);
    CHECK(W.length(W.w0()) == 6);
    for (int i = 0; i < rs.rank; ++i) {
        CHECK(W.length(W.simple_reflection(i)) == 1);
        auto sq = WeylGroup::compose(W.simple_reflection(i), W.simple_reflection(i));
        CHECK(sq == W.identity());
    }
    // reflection in a non-simple root has odd length
    for (int p = 0; p < rs.num_positive(); ++p) CHECK(W.length(W.reflection(p)) % 2 == 1);
}
