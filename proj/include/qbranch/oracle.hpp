#pragma once

#include "qbranch/catalog.hpp"
#include "qbranch/character.hpp"
#include "qbranch/kostant_kernel.hpp"

namespace qbranch {

// Result of greedy highest-weight peeling: k-highest weights (coordinates
// pair against the k simple coroots: sl2_beta label first, then the m_c
// ideals in catalog order) with positive multiplicities.
struct KDecomposition {
    int rank = 0;
    std::vector<std::pair<IVec, Int>> entries;  // sorted by weight

    Int coefficient(const IVec& k_hw) const {
        for (const auto& [w, m] : entries)
            if (w == k_hw) return m;
        return 0;
    }
};

// Equal-rank restriction of a g-character to k-coordinates: every weight is
// re-expressed as (<nu, beta^v>, <nu, delta_i^v> for the retained nodes);
// multiplicities are untouched.
Character restrict_to_k(const QuaternionicPair& p, const Character& ch);

// Greedy decomposition of a restricted character: repeatedly subtract the
// full k-irrep character of a maximal dominant weight. tie_break selects the
// order among height ties (0: lexicographically largest, 1: smallest);
// the result is order-independent for genuine restrictions.
KDecomposition peel(const QuaternionicPair& p, const Character& k_character, int tie_break = 0);

BigInt k_irrep_dimension(const QuaternionicPair& p, const IVec& k_hw);

// freudenthal + restrict_to_k + peel for V(lambda).
KDecomposition oracle_decomposition(const QuaternionicPair& p, const IVec& lambda,
                                    Int dim_cap = kDefaultDimCap, int tie_break = 0);

// Multiplicity of Gamma_m x 1_{m_c} (for g2, side selects the sl2 ideal
// carrying Gamma_m, the other ideal being part of the trivial factor).
Int oracle_multiplicity(const QuaternionicPair& p, const IVec& lambda, Int m,
                        G2Side side = G2Side::beta, Int dim_cap = kDefaultDimCap);
Int oracle_multiplicity(const QuaternionicPair& p, const KDecomposition& dec, Int m,
                        G2Side side = G2Side::beta);

// Dimension of the l-fixed subspace, l = C h_target + (the rest of k).
Int oracle_twistor(const QuaternionicPair& p, const IVec& lambda, G2Side side = G2Side::beta,
                   Int dim_cap = kDefaultDimCap);
Int oracle_twistor(const QuaternionicPair& p, const KDecomposition& dec,
                   G2Side side = G2Side::beta);

// --- classical brute force ----------------------------------------------------

// Decomposition of V(lambda) under the diagonal-block subgroup
// (U(2)xU(n), SO(4)xSO(n) or Sp(1)xSp(n)) by weight-coordinate splitting and
// factor-wise peeling. Entries are epsilon-coordinate highest weights of the
// full product torus.
KDecomposition classical_decomposition(PairFamily family, int n, const IVec& lambda,
                                       Int dim_cap = kDefaultDimCap, int tie_break = 0);

// The fixed space of the second factor as a list of first-factor highest
// weights (epsilon coordinates) with multiplicities.
std::vector<std::pair<IVec, Int>> classical_fixed_space(PairFamily family, int n,
                                                        const IVec& lambda,
                                                        Int dim_cap = kDefaultDimCap);

// Probe multiplicities matching the closed formulas.
Int classical_oracle_mult(PairFamily family, int n, const IVec& lambda, Int m,
                          Int dim_cap = kDefaultDimCap);
Int classical_oracle_twistor(PairFamily family, int n, const IVec& lambda,
                             Int dim_cap = kDefaultDimCap);

// Brute-force branching of the U(4) irrep with the given highest weight to
// SO(4) (torus restriction + sl2 x sl2 peeling): the full decomposition as
// (mu, nu) label pairs, and the multiplicity of 1 x S^m (asserted equal to
// that of S^m x 1).
std::vector<std::pair<IVec, Int>> u4_to_so4_decomposition(const IVec& lambda4,
                                                          Int dim_cap = kDefaultDimCap);
Int u4_to_so4_oracle(const IVec& lambda4, Int m, Int dim_cap = kDefaultDimCap);

}  // namespace qbranch
