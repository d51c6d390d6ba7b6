#include <doctest.h>

#include "qbranch/formulas.hpp"

using namespace qbranch;

TEST_CASE("exceptional multiplicity formula") {
    const auto& e6 = pair(PairFamily::e6);
    CHECK(mult_exceptional(e6, {0, 2, 0, 2, 0, 0}, 4).value == 2);
    CHECK(mult_exceptional(e6, {0, 0, 0, 0, 0, 0}, 0).value == 1);
    CHECK(mult_exceptional(e6, {0, 1, 0, 0, 0, 0}, 2).value == 1);  // adjoint
    CHECK(mult_exceptional(e6, {0, 1, 0, 0, 0, 0}, 1).value == 0);  // odd m

    const auto& f4 = pair(PairFamily::f4);
    auto r = mult_exceptional(f4, {0, 0, 1, 0}, 0);
    CHECK(r.value == 0);
    bool parity_flagged = false;
    for (const auto& c : r.conditions)
        if (!c.satisfied && c.name.find("real simple roots") != std::string::npos)
            parity_flagged = true;
    CHECK(parity_flagged);

    const auto& e8 = pair(PairFamily::e8);
    IVec zero8(8, 0);
    CHECK(mult_exceptional(e8, zero8, 2).value == 0);  // trivial rep has no Gamma_2

    CHECK_THROWS_AS(mult_exceptional(pair(PairFamily::g2), {1, 0}, 0), std::invalid_argument);
    CHECK_THROWS_AS(mult_exceptional(e6, {-1, 0, 0, 0, 0, 0}, 0), std::invalid_argument);
}

TEST_CASE("exceptional twistor formula") {
    const auto& e6 = pair(PairFamily::e6);
    IVec zero6(6, 0);
    CHECK(twistor_exceptional(e6, zero6).value == 1);
    CHECK(twistor_exceptional(e6, {0, 2, 0, 2, 0, 0}).value == 5);

    const auto& e7 = pair(PairFamily::e7);
    IVec w2(7, 0);
    w2[1] = 1;  // violates the h_m constraint
    CHECK(twistor_exceptional(e7, w2).value == 0);
}

TEST_CASE("series sums to the twistor dimension") {
    const auto& e6 = pair(PairFamily::e6);
    auto series = mult_series(e6, {0, 2, 0, 2, 0, 0});
    std::map<Int, Int> expected = {{0, 1}, {2, 2}, {3, 1}, {4, 1}};
    CHECK(series == expected);

    IVec zero6(6, 0);
    auto trivial = mult_series(e6, zero6);
    CHECK(trivial == std::map<Int, Int>{{0, 1}});

    const auto& f4 = pair(PairFamily::f4);
    CHECK(mult_series(f4, {0, 0, 1, 0}).empty());
}

TEST_CASE("twistor-series identity on a sweep") {
    for (auto fam : {PairFamily::e6, PairFamily::e7, PairFamily::e8, PairFamily::f4}) {
        const auto& p = pair(fam);
        for (Int l1 = 0; l1 <= 60; ++l1)
            for (Int l2 = 0; l1 + l2 <= 60; ++l2) {
                IVec lam(p.g.rank, 0);
                lam[p.attach_node] = l1;
                lam[p.second_node] = l2;
                Int sum = 0;
                for (auto [d, v] : mult_series(p, lam)) sum += v;
                CAPTURE(pair_family_name(fam));
                CAPTURE(l1);
                CAPTURE(l2);
                REQUIRE(sum == twistor_exceptional(p, lam).value);
            }
    }
    const auto& g2 = pair(PairFamily::g2);
    for (Int l1 = 0; l1 <= 40; ++l1)
        for (Int l2 = 0; l2 <= 40; ++l2) {
            IVec lam = {l1, l2};
            for (G2Side side : {G2Side::beta, G2Side::alpha2}) {
                Int sum = 0;
                for (auto [d, v] : mult_series(g2, lam, side)) sum += v;
                CAPTURE(l1);
                CAPTURE(l2);
                REQUIRE(sum == twistor_g2(g2, lam, side).value);
            }
        }
}

TEST_CASE("g2 formulas") {
    const auto& g2 = pair(PairFamily::g2);
    CHECK(mult_g2(g2, {1, 0}, 2, G2Side::beta).value == 1);
    CHECK(mult_g2(g2, {1, 0}, 2, G2Side::alpha2).value == 1);
    CHECK(mult_g2(g2, {0, 1}, 2, G2Side::beta).value == 0);  // lambda_2 = 1
    CHECK(mult_g2(g2, {0, 1}, 2, G2Side::alpha2).value == 1);

    CHECK(twistor_g2(g2, {0, 0}, G2Side::beta).value == 1);
    CHECK(twistor_g2(g2, {0, 0}, G2Side::alpha2).value == 1);
    CHECK(twistor_g2(g2, {0, 1}, G2Side::beta).value == 0);
    CHECK(twistor_g2(g2, {1, 0}, G2Side::alpha2).value == 1);
    CHECK(twistor_g2(g2, {1, 0}, G2Side::beta).value == 1);
}

TEST_CASE("formula equals kernel across the exceptional catalog") {
    for (auto fam :
         {PairFamily::e6, PairFamily::e7, PairFamily::e8, PairFamily::f4, PairFamily::g2}) {
        const auto& p = pair(fam);
        for (Int l1 = 0; l1 <= 4; ++l1)
            for (Int l2 = 0; l2 <= 4; ++l2) {
                IVec lam(p.g.rank, 0);
                lam[p.attach_node] = l1;
                lam[p.second_node] = l2;
                for (Int d = 0; d <= 12; ++d) {
                    CAPTURE(pair_family_name(fam));
                    CAPTURE(l1);
                    CAPTURE(l2);
                    CAPTURE(d);
                    if (fam == PairFamily::g2) {
                        CHECK(mult_g2(p, lam, 2 * d, G2Side::beta).value ==
                              kostant_multiplicity(p, lam, 2 * d, G2Side::beta));
                        CHECK(mult_g2(p, lam, 2 * d, G2Side::beta).value ==
                              kostant_multiplicity(p, lam, 2 * d, G2Side::beta, true));
                        CHECK(mult_g2(p, lam, 2 * d, G2Side::alpha2).value ==
                              kostant_multiplicity(p, lam, 2 * d, G2Side::alpha2));
                    } else {
                        CHECK(mult_exceptional(p, lam, 2 * d).value ==
                              kostant_multiplicity(p, lam, 2 * d));
                    }
                }
            }
    }
}

TEST_CASE("unitary fixed space and twistor") {
    auto fs = u_fixed_space(2, {1, 0, 0, -1});
    CHECK(fs == std::vector<std::pair<Int, Int>>{{1, -1}, {0, 0}});
    CHECK(u_fixed_space(3, {2, 1, 1, 0, -1}).empty());  // lambda_3 != 0
    CHECK(u_fixed_space(2, {0, 0, 0, 0}) == std::vector<std::pair<Int, Int>>{{0, 0}});

    CHECK(u_twistor(2, {1, 0, 0, -1}).value == 2);
    CHECK(u_twistor(2, {1, 0, 0, 0}).value == 0);  // parity fails
    CHECK(u_twistor(3, {0, 0, 0, 0, 0}).value == 1);

    CHECK(u_mult(2, {1, 0, 0, -1}, 2).value == 1);  // W(1,-1)
    CHECK(u_mult(2, {1, 0, 0, -1}, 0).value == 1);  // W(0,0)
    CHECK(u_mult(2, {2, 0, 0, -1}, 1).value == 0);  // odd m

    CHECK_THROWS_AS(u_fixed_space(2, {0, 1, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(u_fixed_space(2, {1, 0, 0}), std::invalid_argument);
}

TEST_CASE("u4 to so4 branching") {
    CHECK(u4_to_so4({1, 0, 0, -1}, 2).value == 1);
    CHECK(u4_to_so4({1, 0, 0, -1}, 0).value == 0);
    for (Int m = 0; m <= 6; ++m) CHECK(u4_to_so4({1, 0, 0, 0}, m).value == 0);  // parity

    // duality invariance: lambda -> (-l4,-l3,-l2,-l1)
    for (Int a = -2; a <= 2; ++a)
        for (Int b = -2; b <= a; ++b)
            for (Int c = -2; c <= b; ++c)
                for (Int e = -2; e <= c; ++e)
                    for (Int m = 0; m <= 6; ++m) {
                        IVec lam = {a, b, c, e}, dual = {-e, -c, -b, -a};
                        CHECK(u4_to_so4(lam, m).value == u4_to_so4(dual, m).value);
                    }
}

TEST_CASE("u4 to so4 agrees with the three-constraint kernel") {
    for (Int a = 2; a >= -2; --a)
        for (Int b = std::min(a, (Int)2); b >= -2; --b)
            for (Int c = std::min(b, (Int)2); c >= -2; --c)
                for (Int e = std::min(c, (Int)2); e >= -2; --e)
                    for (Int m = 0; m <= 8; ++m) {
                        IVec lam = {a, b, c, e};
                        CAPTURE(a);
                        CAPTURE(b);
                        CAPTURE(c);
                        CAPTURE(e);
                        CAPTURE(m);
                        CHECK(u4_to_so4(lam, m).value == u4_to_so4_kernel(lam, m));
                    }
}

TEST_CASE("orthogonal fixed space, mult and twistor") {
    auto fs = so_fixed_space(4, {1, 0, 0, 0});
    CHECK(fs.nonzero);
    CHECK(fs.u4_weight == IVec{1, 0, 0, 0});
    for (Int m = 0; m <= 6; ++m) CHECK(so_mult(4, {1, 0, 0, 0}, m).value == 0);

    CHECK_FALSE(so_fixed_space(6, {1, 1, 1, 1, 1}).nonzero);
    CHECK(so_mult(5, {0, 0, 0, 0}, 0).value == 1);

    CHECK(so_twistor(4, {0, 0, 0, 0}).value == 1);
    CHECK(so_twistor(4, {2, 0, 0, 0}).value == 1);
    // adjoint of so(8): one Gamma_{2d} x 1 constituent (d = 1)
    CHECK(so_twistor(4, {1, 1, 0, 0}).value == 1);
    CHECK(so_mult(4, {1, 1, 0, 0}, 2).value == 1);
    CHECK(so_mult(4, {1, 1, 0, 0}, 0).value == 0);

    // negative last coordinate allowed for even n
    CHECK(so_mult(4, {1, 1, 1, -1}, 0).value == so_mult(4, {1, 1, 1, 1}, 0).value);
    CHECK_THROWS_AS(so_twistor(5, {1, 1, 1, -1}), std::invalid_argument);
}

TEST_CASE("symplectic fixed space and twistor") {
    auto fs = sp_fixed_space(2, {1, 0, 0});
    CHECK(fs.nonzero);
    CHECK(fs.sl2_label == 1);  // the defining representation
    CHECK_FALSE(sp_fixed_space(2, {1, 1, 1}).nonzero);

    CHECK(sp_twistor(2, {1, 0, 0}).value == 0);  // odd lambda_1
    CHECK(sp_twistor(2, {2, 0, 0}).value == 1);
    CHECK(sp_twistor(1, {0, 0}).value == 1);
    CHECK(sp_twistor(2, {2, 1, 0}).value == 0);  // lambda_1 - lambda_2 odd
    CHECK(sp_twistor(2, {1, 1, 0}).value == 1);  // S^0 fixed space, even label
    CHECK(sp_twistor(2, {2, 1, 1}).value == 0);  // lambda_3 != 0

    CHECK(sp_mult(2, {1, 0, 0}, 1).value == 1);
    CHECK(sp_mult(2, {1, 0, 0}, 0).value == 0);
    CHECK_THROWS_AS(sp_fixed_space(2, {1, 0, -1}), std::invalid_argument);
}
