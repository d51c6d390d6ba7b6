#include <doctest.h>

#include "qbranch/catalog.hpp"

using namespace qbranch;

TEST_CASE("exceptional pair records load and self-verify") {
    for (auto f : {PairFamily::e6, PairFamily::e7, PairFamily::e8, PairFamily::f4, PairFamily::g2}) {
        const QuaternionicPair& p = pair(f);
        CHECK(p.g.rank >= 2);
        CHECK(p.k_ideals.size() == 2);
    }
}

TEST_CASE("attach and second nodes match the affine diagram tables") {
    // 1-based expectations: e6 (2,4), e7 (1,3), e8 (8,7), f4 (1,2), g2 (1,2)
    CHECK(pair(PairFamily::e6).attach_node == 1);
    CHECK(pair(PairFamily::e6).second_node == 3);
    CHECK(pair(PairFamily::e7).attach_node == 0);
    CHECK(pair(PairFamily::e7).second_node == 2);
    CHECK(pair(PairFamily::e8).attach_node == 7);
    CHECK(pair(PairFamily::e8).second_node == 6);
    CHECK(pair(PairFamily::f4).attach_node == 0);
    CHECK(pair(PairFamily::f4).second_node == 1);
    CHECK(pair(PairFamily::g2).attach_node == 0);
    CHECK(pair(PairFamily::g2).second_node == 1);
}

TEST_CASE("real simple roots per pair") {
    CHECK(pair(PairFamily::e6).real_nodes() == std::vector<int>{1, 3});
    CHECK(pair(PairFamily::e7).real_nodes() == std::vector<int>{0, 2});
    CHECK(pair(PairFamily::e8).real_nodes() == std::vector<int>{6, 7});
    CHECK(pair(PairFamily::f4).real_nodes() == std::vector<int>{0, 1, 2, 3});
    CHECK(pair(PairFamily::g2).real_nodes() == std::vector<int>{0, 1});
}

TEST_CASE("strongly orthogonal roots for f4 and g2 as catalogued") {
    const auto& f4 = pair(PairFamily::f4);
    CHECK(f4.sor == std::vector<IVec>{{1, 0, 0, 0}, {1, 2, 2, 0}, {1, 2, 2, 2}, {1, 2, 4, 2}});
    CHECK(f4.beta() == IVec{2, 3, 4, 2});
    const auto& g2 = pair(PairFamily::g2);
    CHECK(g2.sor == std::vector<IVec>{{1, 0}, {1, 2}});
    CHECK(g2.beta() == IVec{2, 3});
}

TEST_CASE("hm vanishing constraints") {
    const auto& f4 = pair(PairFamily::f4);
    CHECK(hm_vanishes(f4, {3, 1, 4, 1}));  // split form: no condition

    const auto& e7 = pair(PairFamily::e7);
    IVec w2(7, 0);
    w2[1] = 1;
    CHECK_FALSE(hm_vanishes(e7, w2));
    CHECK(hm_vanishes(e7, {1, 0, 2, 5, 0, 3, 0}));

    const auto& e6 = pair(PairFamily::e6);
    CHECK(hm_vanishes(e6, {0, 1, 0, 1, 0, 0}));
    CHECK(hm_vanishes(e6, {2, 1, 3, 1, 3, 2}));
    CHECK_FALSE(hm_vanishes(e6, {1, 0, 0, 0, 0, 0}));

    const auto& e8 = pair(PairFamily::e8);
    IVec ok(8, 0);
    ok[6] = 2;
    ok[7] = 1;
    ok[0] = 5;
    ok[5] = 3;
    CHECK(hm_vanishes(e8, ok));
    ok[2] = 1;
    CHECK_FALSE(hm_vanishes(e8, ok));
}

TEST_CASE("projection tables") {
    const auto& e7 = pair(PairFamily::e7);
    auto t = projection_table(e7);
    CHECK(t.at(0).kind == ProjectionKind::neg_half_H);
    CHECK(t.at(2).kind == ProjectionKind::half_EplusF);
    for (int j : {1, 3, 4, 5, 6}) CHECK(t.at(j).kind == ProjectionKind::zero);

    const auto& e8 = pair(PairFamily::e8);
    auto t8 = projection_table(e8);
    CHECK(t8.at(7).kind == ProjectionKind::neg_half_H);
    CHECK(t8.at(6).kind == ProjectionKind::half_EplusF);

    const auto& g2 = pair(PairFamily::g2);
    auto tb = projection_table(g2);
    CHECK(tb.at(0).kind == ProjectionKind::neg_half_H);
    CHECK(tb.at(1).kind == ProjectionKind::three_half_EplusF);
    auto ta = projection_table(g2, true);
    CHECK(ta.at(0).kind == ProjectionKind::pos_half_H);
    CHECK(ta.at(1).kind == ProjectionKind::neg_half_EplusF);
    CHECK(ta.at(1).ef == Frac(-1, 2));

    CHECK_THROWS_AS(projection_table(e7, true), std::invalid_argument);
}

TEST_CASE("d4 subsystem verification passes for the rank-4 pairs") {
    for (auto f : {PairFamily::e6, PairFamily::e7, PairFamily::e8, PairFamily::f4}) {
        Report rep = verify_d4_subsystem(pair(f));
        CAPTURE(pair_family_name(f));
        for (const auto& c : rep.checks) {
            CAPTURE(c.name);
            CHECK(c.pass);
        }
    }
    CHECK_THROWS_AS(verify_d4_subsystem(pair(PairFamily::g2)), std::invalid_argument);
}

TEST_CASE("corrupted orthogonality data is caught") {
    QuaternionicPair bad = pair(PairFamily::f4);
    bad.sor[1] = {0, 1, 0, 0};  // a simple root; gamma_1 + this is a root
    Report rep = verify_d4_subsystem(bad);
    CHECK_FALSE(rep.pass());
    bool found = false;
    for (const auto& c : rep.checks)
        if (!c.pass && c.name.find("orthogonality") != std::string::npos) found = true;
    CHECK(found);
}

TEST_CASE("classical records") {
    QuaternionicPair u2 = pair(PairFamily::u, 2);
    CHECK(u2.g.rank == 3);
    CHECK(u2.weight_arity == 4);
    QuaternionicPair so4 = pair(PairFamily::so, 4);
    CHECK(so4.g.type == SimpleType::D);
    CHECK(so4.g.rank == 4);
    QuaternionicPair so5 = pair(PairFamily::so, 5);
    CHECK(so5.g.type == SimpleType::B);
    CHECK(so5.g.rank == 4);
    QuaternionicPair sp1 = pair(PairFamily::sp, 1);
    CHECK(sp1.g.type == SimpleType::C);
    CHECK(sp1.g.rank == 2);
    CHECK_THROWS_AS(pair(PairFamily::u, 1), std::invalid_argument);
    CHECK_THROWS_AS(pair(PairFamily::so, 3), std::invalid_argument);
    CHECK_THROWS_AS(pair(PairFamily::sp, 0), std::invalid_argument);
}

TEST_CASE("lattice membership helper") {
    CHECK(in_lattice_span({{2, 0}, {0, 3}}, {4, 6}));
    CHECK_FALSE(in_lattice_span({{2, 0}, {0, 3}}, {1, 0}));
    CHECK(in_lattice_span({{1, 1}, {1, -1}}, {2, 0}));
    CHECK_FALSE(in_lattice_span({{1, 1}, {1, -1}}, {1, 0}));
}
