#include <doctest.h>

#include "qbranch/character.hpp"

using namespace qbranch;

TEST_CASE("trivial character") {
    RootSystem g2 = build_root_system(SimpleType::G, 2);
    Character ch = freudenthal(g2, {0, 0});
    CHECK(ch.entries.size() == 1);
    CHECK(ch.mult({0, 0}) == 1);
}

TEST_CASE("sl2 strings") {
    RootSystem a1 = build_root_system(SimpleType::A, 1);
    for (Int m : {0, 1, 5, 12}) {
        Character ch = freudenthal(a1, {m});
        CHECK((Int)ch.entries.size() == m + 1);
        for (Int k = -m; k <= m; k += 2) CHECK(ch.mult({k}) == 1);
        CHECK(ch.total_mass() == m + 1);
    }
}

TEST_CASE("g2 adjoint weights") {
    RootSystem g2 = build_root_system(SimpleType::G, 2);
    Character ch = freudenthal(g2, {1, 0});
    CHECK(ch.total_mass() == 14);
    CHECK(ch.entries.size() == 13);  // 12 roots and zero
    CHECK(ch.mult({0, 0}) == 2);
    for (const auto& c : g2.positive_roots) CHECK(ch.mult(g2.root_to_fund(c)) == 1);
}

TEST_CASE("freudenthal mass equals the Weyl dimension") {
    struct Case {
        SimpleType t;
        int r;
        IVec lam;
    };
    const Case cases[] = {
        {SimpleType::A, 2, {1, 1}},          {SimpleType::A, 3, {1, 0, 1}},
        {SimpleType::C, 3, {0, 1, 0}},       {SimpleType::B, 2, {0, 2}},
        {SimpleType::D, 4, {1, 0, 1, 1}},    {SimpleType::F, 4, {0, 0, 0, 1}},
        {SimpleType::G, 2, {0, 2}},          {SimpleType::E, 6, {1, 0, 0, 0, 0, 1}},
    };
    for (const auto& c : cases) {
        RootSystem rs = build_root_system(c.t, c.r);
        Character ch = freudenthal(rs, c.lam);
        CHECK(ch.total_mass() == rs.weyl_dimension(c.lam));
    }
}

TEST_CASE("freudenthal matches an explicit sl3 tensor product") {
    // V(1,0) (x) V(0,1) = V(1,1) + V(0,0): convolve characters by hand.
    RootSystem a2 = build_root_system(SimpleType::A, 2);
    Character v10 = freudenthal(a2, {1, 0});
    Character v01 = freudenthal(a2, {0, 1});
    Character prod;
    prod.rank = 2;
    for (const auto& [k1, m1] : v10.entries)
        for (const auto& [k2, m2] : v01.entries) {
            IVec w1 = key_to_vec(k1, 2), w2 = key_to_vec(k2, 2);
            prod.add({w1[0] + w2[0], w1[1] + w2[1]}, m1 * m2);
        }
    Character adj = freudenthal(a2, {1, 1});
    for (const auto& [k, m] : prod.entries) {
        Int expected = adj.mult(key_to_vec(k, 2)) + (key_to_vec(k, 2) == IVec{0, 0} ? 1 : 0);
        CHECK(m == expected);
    }
}

TEST_CASE("dimension cap is enforced with the estimate in the message") {
    RootSystem e8 = build_root_system(SimpleType::E, 8);
    IVec big(8, 1);
    CHECK_THROWS_WITH_AS(freudenthal(e8, big, 1000),
                         doctest::Contains("exceeds cap"), std::invalid_argument);
}

TEST_CASE("weyl invariance of the produced character") {
    RootSystem f4 = build_root_system(SimpleType::F, 4);
    Character ch = freudenthal(f4, {1, 0, 0, 0});
    for (const auto& [key, m] : ch.entries) {
        IVec w = key_to_vec(key, 4);
        for (int i = 0; i < 4; ++i) CHECK(ch.mult(f4.simple_reflection(i, w)) == m);
    }
}
