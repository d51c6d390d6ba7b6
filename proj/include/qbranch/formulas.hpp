#pragma once

#include <map>
#include <string>
#include <vector>

#include "qbranch/catalog.hpp"
#include "qbranch/kostant_kernel.hpp"

namespace qbranch {

struct Condition {
    std::string name;
    bool satisfied;
};

struct MultResult {
    Int value = 0;
    std::vector<Condition> conditions;

    bool eligible() const {
        for (const auto& c : conditions)
            if (!c.satisfied) return false;
        return true;
    }
};

// --- exceptional pairs -----------------------------------------------------

// Multiplicity of Gamma_m x 1_{m_c} in V(lambda) for e6/e7/e8/f4.
MultResult mult_exceptional(const QuaternionicPair& p, const IVec& lambda, Int m);

// Dimension of the space of l-fixed vectors, l = C beta^v + m_c.
MultResult twistor_exceptional(const QuaternionicPair& p, const IVec& lambda);

// g2 variants: side selects which sl2 ideal carries Gamma_m.
MultResult mult_g2(const QuaternionicPair& p, const IVec& lambda, Int m, G2Side side);
MultResult twistor_g2(const QuaternionicPair& p, const IVec& lambda, G2Side side);

// Uniform entry point dispatching on the family (g2 uses side).
MultResult mult_formula(const QuaternionicPair& p, const IVec& lambda, Int m,
                        G2Side side = G2Side::beta);
MultResult twistor_formula(const QuaternionicPair& p, const IVec& lambda,
                           G2Side side = G2Side::beta);

// All d with nonzero multiplicity (d <= lambda_1 + lambda_2).
std::map<Int, Int> mult_series(const QuaternionicPair& p, const IVec& lambda,
                               G2Side side = G2Side::beta);

// --- classical families ------------------------------------------------------

// U(n+2) restricted to U(2) x U(n): the U(n)-fixed space as a multiplicity-
// free list of U(2) highest weights (nu1 >= nu2); empty when the fixed space
// vanishes.
std::vector<std::pair<Int, Int>> u_fixed_space(int n, const IVec& lambda);
MultResult u_twistor(int n, const IVec& lambda);
// Multiplicity of Gamma_m x 1 (trivial central character and trivial U(n)).
MultResult u_mult(int n, const IVec& lambda, Int m);

// U(4) restricted to SO(4): multiplicity of 1 x S^m (= S^m x 1).
MultResult u4_to_so4(const IVec& lambda4, Int m);
// Same multiplicity through the three-constraint joint kernel (cross-check).
Int u4_to_so4_kernel(const IVec& lambda4, Int m);

// SO(n+4) restricted to SO(4) x SO(n).
struct SoFixedSpace {
    bool nonzero = false;
    IVec u4_weight;  // restriction of this U(4) irrep to SO(4) describes it
};
SoFixedSpace so_fixed_space(int n, const IVec& lambda);
MultResult so_mult(int n, const IVec& lambda, Int m);
MultResult so_twistor(int n, const IVec& lambda);

// Sp(n+1) restricted to Sp(1) x Sp(n).
struct SpFixedSpace {
    bool nonzero = false;
    Int sl2_label = 0;  // fixed space is S^{label}(C^2)
};
SpFixedSpace sp_fixed_space(int n, const IVec& lambda);
MultResult sp_mult(int n, const IVec& lambda, Int m);
MultResult sp_twistor(int n, const IVec& lambda);

// Validation helpers (throw std::invalid_argument naming the violation).
void validate_classical_weight(PairFamily family, int n, const IVec& lambda);

}  // namespace qbranch
