#include <doctest.h>

#include <cstdlib>
#include <set>

#include "qbranch/formulas.hpp"
#include "qbranch/oracle.hpp"

using namespace qbranch;

namespace {
struct CacheSandbox {
    CacheSandbox() { setenv("QBRANCH_CACHE", "/tmp/qbranch-test-cache", 1); }
} sandbox;
}  // namespace

TEST_CASE("g2 adjoint restriction and peeling") {
    const auto& g2 = pair(PairFamily::g2);
    Character ch = freudenthal(g2.g, {1, 0});
    Character kch = restrict_to_k(g2, ch);
    CHECK(kch.total_mass() == 14);
    CHECK(kch.mult({0, 0}) == 2);  // zero weight maps to zero weight
    CHECK(kch.mult({2, 0}) == 1);  // beta direction

    KDecomposition dec = peel(g2, kch);
    REQUIRE(dec.entries.size() == 3);
    CHECK(dec.coefficient({2, 0}) == 1);  // Gamma_2 x 1
    CHECK(dec.coefficient({0, 2}) == 1);  // 1 x Gamma_2
    CHECK(dec.coefficient({1, 3}) == 1);  // Gamma_1 x Gamma_3
    // mass: 3 + 3 + 8 = 14
    CHECK(k_irrep_dimension(g2, {1, 3}) == 8);

    // peeling is order-independent
    KDecomposition dec2 = peel(g2, kch, 1);
    CHECK(dec.entries == dec2.entries);
}

TEST_CASE("trivial character peels to the trivial type") {
    const auto& f4 = pair(PairFamily::f4);
    KDecomposition dec = oracle_decomposition(f4, IVec(4, 0));
    REQUIRE(dec.entries.size() == 1);
    CHECK(dec.entries[0].first == IVec(4, 0));
    CHECK(dec.entries[0].second == 1);
}

TEST_CASE("f4 26-dimensional representation") {
    const auto& f4 = pair(PairFamily::f4);
    KDecomposition dec = oracle_decomposition(f4, {0, 0, 0, 1});
    BigInt mass = 0;
    for (const auto& [w, m] : dec.entries) mass += m * k_irrep_dimension(f4, w);
    CHECK(mass == 26);
    // 26 = (Gamma_1 x C^6) + (1 x Lambda^2_0 C^6): no Gamma_m x 1 at all
    REQUIRE(dec.entries.size() == 2);
    CHECK(dec.coefficient({1, 1, 0, 0}) == 1);
    CHECK(dec.coefficient({0, 0, 1, 0}) == 1);
    for (Int m = 0; m <= 4; ++m) CHECK(oracle_multiplicity(f4, dec, m) == 0);
}

TEST_CASE("g2 oracle agrees with the formulas, both sides") {
    const auto& g2 = pair(PairFamily::g2);
    for (Int l1 = 0; l1 <= 2; ++l1)
        for (Int l2 = 0; l2 <= 2; ++l2) {
            IVec lam = {l1, l2};
            KDecomposition dec = oracle_decomposition(g2, lam);
            for (Int m = 0; m <= 2 * (l1 + l2) + 2; ++m) {
                CAPTURE(l1);
                CAPTURE(l2);
                CAPTURE(m);
                CHECK(oracle_multiplicity(g2, dec, m, G2Side::beta) ==
                      mult_g2(g2, lam, m, G2Side::beta).value);
                CHECK(oracle_multiplicity(g2, dec, m, G2Side::alpha2) ==
                      mult_g2(g2, lam, m, G2Side::alpha2).value);
            }
            CHECK(oracle_twistor(g2, dec, G2Side::beta) ==
                  twistor_g2(g2, lam, G2Side::beta).value);
            CHECK(oracle_twistor(g2, dec, G2Side::alpha2) ==
                  twistor_g2(g2, lam, G2Side::alpha2).value);
        }
}

TEST_CASE("g2 spot checks from the adjoint and the 7-dimensional rep") {
    const auto& g2 = pair(PairFamily::g2);
    KDecomposition adj = oracle_decomposition(g2, {1, 0});
    CHECK(oracle_multiplicity(g2, adj, 2, G2Side::beta) == 1);
    CHECK(oracle_multiplicity(g2, adj, 2, G2Side::alpha2) == 1);
    CHECK(oracle_twistor(g2, adj, G2Side::beta) == 1);
    CHECK(oracle_twistor(g2, adj, G2Side::alpha2) == 1);

    // V(pi_2) (dim 7) has no l_beta-fixed vector (lambda_2 = 1)
    KDecomposition seven = oracle_decomposition(g2, {0, 1});
    CHECK(oracle_twistor(g2, seven, G2Side::beta) == 0);
    CHECK(oracle_twistor(g2, seven, G2Side::alpha2) ==
          twistor_g2(g2, {0, 1}, G2Side::alpha2).value);
}

TEST_CASE("f4 oracle agreement on small weights") {
    const auto& f4 = pair(PairFamily::f4);
    for (IVec lam : {IVec{1, 0, 0, 0}, IVec{0, 1, 0, 0}, IVec{1, 1, 0, 0}}) {
        KDecomposition dec = oracle_decomposition(f4, lam);
        Int l1 = lam[0], l2 = lam[1];
        for (Int m = 0; m <= 2 * (l1 + l2) + 2; ++m) {
            CAPTURE(lam[0]);
            CAPTURE(lam[1]);
            CAPTURE(m);
            CHECK(oracle_multiplicity(f4, dec, m) == mult_exceptional(f4, lam, m).value);
            CHECK(oracle_multiplicity(f4, dec, m) == kostant_multiplicity(f4, lam, m));
        }
        CHECK(oracle_twistor(f4, dec) == twistor_exceptional(f4, lam).value);
    }
}

TEST_CASE("e6 adjoint under sl2 + sl6") {
    const auto& e6 = pair(PairFamily::e6);
    IVec adj(6, 0);
    adj[1] = 1;
    KDecomposition dec = oracle_decomposition(e6, adj);
    // 78 = (Gamma_2 x 1) + (1 x adjoint) + (Gamma_1 x Lambda^3 C^6)
    CHECK(dec.entries.size() == 3);
    CHECK(oracle_multiplicity(e6, dec, 2) == 1);
    CHECK(oracle_multiplicity(e6, dec, 0) == 0);
    CHECK(oracle_twistor(e6, dec) == 1);

    IVec l3(6, 0);
    l3[0] = 1;
    CHECK(k_irrep_dimension(e6, IVec{1, 0, 0, 1, 0, 0}) == 40);  // Gamma_1 x 20
}

TEST_CASE("e6 mirror weight outside the active nodes still branches correctly") {
    // lambda = pi_1 + pi_6 (650-dimensional) passes the h_m constraint with
    // odd coordinates at complex nodes; it contains a k-fixed vector.
    const auto& e6 = pair(PairFamily::e6);
    IVec lam = {1, 0, 0, 0, 0, 1};
    KDecomposition dec = oracle_decomposition(e6, lam);
    CHECK(oracle_multiplicity(e6, dec, 0) == 1);
    for (Int m = 0; m <= 6; ++m) {
        CAPTURE(m);
        CHECK(oracle_multiplicity(e6, dec, m) == mult_exceptional(e6, lam, m).value);
        CHECK(oracle_multiplicity(e6, dec, m) == kostant_multiplicity(e6, lam, m));
    }
    CHECK(oracle_twistor(e6, dec) == twistor_exceptional(e6, lam).value);
}

TEST_CASE("dimension cap rejection carries the estimate") {
    const auto& e8 = pair(PairFamily::e8);
    IVec big(8, 0);
    big[6] = 1;
    big[7] = 1;
    CHECK_THROWS_AS(oracle_decomposition(e8, big, 1000), std::invalid_argument);
}

TEST_CASE("adjoint representations decompose with the classical shapes") {
    // g adjoint under k: (Gamma_2 x 1) + (1 x adjoint m_c) + (Gamma_1 x R)
    // with dim R = 20, 32, 56, 14 for e6, e7, e8, f4.
    struct Anchor {
        PairFamily fam;
        Int mc_adjoint_dim;
        Int r_dim;
    };
    const Anchor anchors[] = {
        {PairFamily::e6, 35, 20},
        {PairFamily::e7, 66, 32},
        {PairFamily::e8, 133, 56},
        {PairFamily::f4, 21, 14},
    };
    for (const auto& a : anchors) {
        const auto& p = pair(a.fam);
        IVec adj(p.g.rank, 0);
        adj[p.attach_node] = 1;
        KDecomposition dec = oracle_decomposition(p, adj);
        CAPTURE(pair_family_name(a.fam));
        REQUIRE(dec.entries.size() == 3);
        std::multiset<std::pair<Int, Int>> shape;  // (sl2 label, total dim)
        for (const auto& [w, m] : dec.entries) {
            CHECK(m == 1);
            shape.insert({w[0], (Int)k_irrep_dimension(p, w)});
        }
        std::multiset<std::pair<Int, Int>> expected = {
            {2, 3}, {0, a.mc_adjoint_dim}, {1, 2 * a.r_dim}};
        CHECK(shape == expected);
    }
}
