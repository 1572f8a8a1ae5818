#include "comin/catalog.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace comin;

TEST_CASE("table values for the classical families") {
    SpaceDescriptor g24 = describe(Family::Grassmannian, 2, 4);
    CHECK(g24.dim == 4);
    CHECK(g24.index == 4);
    CHECK(g24.r == 2);
    CHECK(g24.vmrt.kind == VmrtDescriptor::Kind::Segre);
    CHECK(g24.vmrt.a == 1);
    CHECK(g24.vmrt.b == 1);

    SpaceDescriptor e7 = describe(Family::Freudenthal);
    CHECK(e7.dim == 27);
    CHECK(e7.index == 18);
    CHECK(e7.r == 3);
    CHECK(e7.vmrt.kind == VmrtDescriptor::Kind::Cominuscule);
    CHECK(e7.vmrt.inner->name == "E6");

    SpaceDescriptor lg4 = describe(Family::LagrangianGrass, 4, 0);
    CHECK(lg4.dim == 10);
    CHECK(lg4.index == 5);
    CHECK(lg4.r == 4);
    CHECK(lg4.vmrt.kind == VmrtDescriptor::Kind::Veronese);
    CHECK(lg4.vmrt.a == 3);

    SpaceDescriptor og5 = describe(Family::OrthogonalGrass, 5, 0);
    CHECK(og5.dim == 10);
    CHECK(og5.index == 8);
    CHECK(og5.r == 2);
    CHECK(og5.vmrt.inner->name == "Gr(2,5)");
}

TEST_CASE("low-rank coincidences are normalized") {
    CHECK(describe(Family::EvenQuadric, 4, 0).name == "Gr(2,4)");
    CHECK(describe(Family::OddQuadric, 3, 0).name == "LG(2)");
    CHECK(describe(Family::OrthogonalGrass, 3, 0).name == "Gr(1,4)");
    CHECK(parse_space("Q(4)").name == "Gr(2,4)");
    CHECK(parse_space("Q(3)").name == "LG(2)");
}

TEST_CASE("names outside the classification are rejected with a reason") {
    CHECK_THROWS_AS(parse_space("Gr(0,4)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_space("Xyz(1)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_space("Q(2)"), std::invalid_argument);
    CHECK_THROWS_AS(describe_root(TypeLabel::E7, 7, 1), std::invalid_argument);
    CHECK_THROWS_AS(describe_root(TypeLabel::D, 2, 1), std::invalid_argument);
}

TEST_CASE("root-coordinate spelling resolves to catalog names") {
    CHECK(describe_root(TypeLabel::A, 3, 2).name == "Gr(2,4)");
    CHECK(describe_root(TypeLabel::B, 3, 1).name == "Q(5)");
    CHECK(describe_root(TypeLabel::C, 2, 2).name == "LG(2)");
    CHECK(describe_root(TypeLabel::D, 5, 5).name == "OG(5)");
    CHECK(describe_root(TypeLabel::E6, 6, 6).name == "E6");
    CHECK(describe_root(TypeLabel::E6, 6, 1).name == "E6");
}

TEST_CASE("vmrt towers terminate at a Segre or Veronese kind") {
    auto tower = vmrt_tower(describe(Family::Freudenthal));
    REQUIRE(tower.size() == 4);
    CHECK(tower[0].inner->name == "E6");
    CHECK(tower[1].inner->name == "OG(5)");
    CHECK(tower[2].inner->name == "Gr(2,5)");
    CHECK(tower[3].kind == VmrtDescriptor::Kind::Segre);
    CHECK(tower[3].a == 1);
    CHECK(tower[3].b == 2);

    auto lg = vmrt_tower(describe(Family::LagrangianGrass, 4, 0));
    REQUIRE(lg.size() == 1);
    CHECK(lg[0].kind == VmrtDescriptor::Kind::Veronese);

    // two quadric steps, then the B_2 = C_2 coincidence, then the Veronese conic
    auto q7 = vmrt_tower(describe(Family::OddQuadric, 7, 0));
    REQUIRE(q7.size() == 3);
    CHECK(q7[0].inner->name == "Q(5)");
    CHECK(q7[1].inner->name == "LG(2)");
    CHECK(q7[2].kind == VmrtDescriptor::Kind::Veronese);
    CHECK(q7[2].a == 1);

    for (auto& t : {describe(Family::CayleyPlane), describe(Family::EvenQuadric, 8, 0)}) {
        auto tw = vmrt_tower(t);
        CHECK(static_cast<int>(tw.size()) <= t.dim);
        CHECK(tw.back().kind != VmrtDescriptor::Kind::Cominuscule);
    }
}

TEST_CASE("vmrt dimension matches the fibre of lines through a point") {
    // dim M_1 = dim X + dim V, with M_1 = G/P_{I(alpha)} computed from roots
    for (const SpaceDescriptor& s :
         {describe(Family::Grassmannian, 2, 5), describe(Family::Grassmannian, 3, 6),
          describe(Family::OddQuadric, 5, 0), describe(Family::LagrangianGrass, 3, 0),
          describe(Family::OrthogonalGrass, 5, 0), describe(Family::EvenQuadric, 6, 0),
          describe(Family::CayleyPlane), describe(Family::Freudenthal)}) {
        RootSystem rs = RootSystem::build(s.root_type, s.root_rank);
        std::vector<int> marked = rs.dynkin_neighbors(s.marked_node);
        marked.push_back(s.marked_node);
        CHECK(rs.dim_of_parabolic(marked) == s.dim + s.vmrt.dim_v);
    }
}

TEST_CASE("closed-form tangent variety degrees") {
    CHECK(vmrt_closed_form_degree(describe(Family::Grassmannian, 2, 5).vmrt) == 3);
    CHECK(vmrt_closed_form_degree(describe(Family::LagrangianGrass, 4, 0).vmrt) == 8);
}
