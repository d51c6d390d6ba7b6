#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qbranch/report.hpp"
#include "qbranch/root_system.hpp"

namespace qbranch {

enum class PairFamily { e6, e7, e8, f4, g2, u, so, sp };

PairFamily pair_family_from_string(const std::string& s);
std::string pair_family_name(PairFamily f);
bool is_exceptional(PairFamily f);

enum class SatakeClass { Real, Imaginary, Complex };

enum class ProjectionKind {
    zero,
    neg_half_H,
    pos_half_H,
    half_EplusF,
    neg_half_EplusF,
    three_half_EplusF,
};

// Coefficient of the sl2 projection as (h, e_plus_f) multiples of
// (H_target, X_target + X_{-target}).
struct ProjectionValue {
    ProjectionKind kind = ProjectionKind::zero;
    Frac h;
    Frac ef;
};

ProjectionValue projection_value(ProjectionKind k);

// One simple ideal of k. nodes lists ambient simple-root indices in an
// order that makes the restricted Cartan matrix equal the canonical
// (type, rank) matrix; empty for the sl2 ideal generated by the highest
// root.
struct KIdeal {
    SimpleType type;
    int rank;
    std::vector<int> nodes;
};

// Catalog record of a quaternionic symmetric pair. Exceptional entries are
// fully populated; classical families (u/so/sp) carry the ambient data and
// the sizes used by the Knapp-style formulas.
struct QuaternionicPair {
    PairFamily family = PairFamily::g2;
    RootSystem g;

    // exceptional data (all simple-root indices 0-based)
    int attach_node = -1;  // the node joined to -beta in the affine diagram
    int second_node = -1;  // the node joined to attach_node
    std::vector<SatakeClass> satake;
    std::vector<std::pair<int, int>> complex_pairs;  // arrow-joined nodes
    std::vector<IVec> sor;                           // strongly orthogonal roots
    std::vector<KIdeal> k_ideals;                    // [0] is always sl2_beta
    std::vector<int> hm_zero_nodes;
    std::vector<std::pair<int, int>> hm_equal_pairs;
    std::vector<IVec> d4_simple;      // empty for g2
    std::vector<int> d4_membership;   // nodes with delta_i in <gamma..,beta>_Z

    // classical data
    int n = 0;           // u: U(n+2), so: SO(n+4), sp: Sp(n+1)
    int weight_arity = 0;

    std::vector<int> real_nodes() const;
    const IVec& beta() const { return g.highest_root; }
    bool has_d4_data() const { return !d4_simple.empty(); }
};

// Exceptional pairs are immutable singletons, verified at first use.
const QuaternionicPair& pair(PairFamily family);

// Classical pair; n is validated against the family's range
// (u: n>=2, so: n>=4, sp: n>=1).
QuaternionicPair pair(PairFamily family, int n);

// lambda|_{h_m} = 0 per the pair's Satake data: zero at imaginary nodes,
// equal across arrow-paired nodes; no condition for split pairs.
bool hm_vanishes(const QuaternionicPair& p, const IVec& lambda);

// Projection table of Z_{alpha_j} onto the target sl2, keyed by simple-root
// index. target_second only applies to g2 and selects the delta_2 table.
std::map<int, ProjectionValue> projection_table(const QuaternionicPair& p,
                                                bool target_second = false);

// Checks the D4-subsystem data of a real-rank-4 exceptional pair:
// (i) the stated simple roots span a D4 subsystem inside the ambient roots,
// (ii) with the right Cartan matrix, (iii) highest root beta, and
// (iv) the integral membership indices are exactly as recorded.
Report verify_d4_subsystem(const QuaternionicPair& p);

// Is v in the Z-span of the given lattice generators? (exact, HNF-based)
bool in_lattice_span(const std::vector<IVec>& gens, const IVec& v);

}  // namespace qbranch
