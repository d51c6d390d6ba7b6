#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qbranch/numeric.hpp"

namespace qbranch {

enum class SimpleType : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

SimpleType simple_type_from_char(char c);

// Finite root system of a simple (or explicitly reducible) type.
//
// Conventions, used consistently everywhere:
//   * cartan[i][j] = <alpha_j, alpha_i^vee>  (row i pairs against coroot i)
//   * roots are stored in simple-root coordinates, weights in
//     fundamental-weight coordinates
//   * sym[i] = (alpha_i, alpha_i)/2, a positive integer making
//     diag(sym) * cartan symmetric; it fixes the invariant form
//   * G2 is labeled with node 1 the LONG root (highest root 2a1+3a2);
//     this is the transpose of the Bourbaki labeling (see catalog docs)
class RootSystem {
  public:
    SimpleType type;
    int rank;
    std::vector<IVec> cartan;          // rank x rank
    IVec sym;                          // symmetrizer d_i
    std::vector<IVec> positive_roots;  // root coordinates, by increasing height
    IVec highest_root;                 // root coordinates

    // Derived, filled at construction.
    std::vector<IVec> cartan_inv_num;  // rank x rank, A^{-1} = cartan_inv_num / cartan_det
    Int cartan_det = 1;
    std::vector<IVec> pos_root_fund;   // fundamental coords of each positive root
    IVec pos_root_halfnorm;            // (alpha,alpha)/2 per positive root

    Int pairing_with_simple_coroot(const IVec& weight, int i) const;

    // <w, alpha^vee> for a root alpha in root coordinates; integral for any
    // lattice weight. Non-root vectors are rejected.
    Frac pairing(const IVec& weight, const IVec& root_coords) const;

    // Precomputed coroot pairing <., alpha^vee> as an integer functional:
    // w -> (sum_j weights[j] w_j) / halfnorm.
    struct CorootForm {
        IVec weights;
        Int halfnorm;
        Int apply(const IVec& w) const {
            Int s = 0;
            for (size_t j = 0; j < weights.size(); ++j) s += weights[j] * w[j];
            if (s % halfnorm != 0) throw std::logic_error("non-integral coroot pairing");
            return s / halfnorm;
        }
    };
    CorootForm coroot_form(const IVec& root_coords) const;

    // (alpha, beta) for vectors in root coordinates.
    Int form_roots(const IVec& a, const IVec& b) const;

    bool is_root(const IVec& coords) const;  // positive or negative root
    bool is_dominant(const IVec& weight) const;

    IVec root_to_fund(const IVec& root_coords) const;   // w = A c
    // Inverse of root_to_fund; nullopt if the weight is not in the root lattice.
    std::optional<IVec> fund_to_root(const IVec& weight) const;

    // s_i acting on a weight in fundamental coordinates.
    IVec simple_reflection(int i, const IVec& weight) const;

    // Representative of the Weyl orbit in the dominant chamber (no shift).
    IVec dominant_representative(IVec weight) const;

    // rho-shifted chamber move: returns the dominant representative of
    // w under the dot action, the sign of the word used, and whether
    // w + rho was regular.
    struct DotResult {
        IVec weight;
        int sign;
        bool regular;
    };
    DotResult dominant_conjugate(const IVec& weight) const;

    BigInt weyl_dimension(const IVec& lambda) const;

    std::string label() const;
};

// Standard simple types; classical ranks arbitrary (>=1), exceptional as usual.
// Invalid combinations are rejected.
RootSystem build_root_system(SimpleType type, int rank);

// Root system from explicit Cartan data (used for subsystems in tests).
RootSystem build_root_system_from_cartan(const std::vector<IVec>& cartan, const IVec& sym,
                                         SimpleType label, int rank);

// Signed root of an ambient system, labeling the abstract Chevalley
// generators {X_r, X_{-r}, H_r} without fixing a matrix realization.
// Construction validates membership.
struct RootVectorIndex {
    IVec root;

    RootVectorIndex(const RootSystem& rs, IVec r) : root(std::move(r)) {
        if (!rs.is_root(root))
            throw std::invalid_argument("RootVectorIndex: not a root of the system");
    }
    RootVectorIndex negated() const {
        RootVectorIndex n = *this;
        for (auto& x : n.root) x = -x;
        return n;
    }

  private:
    RootVectorIndex() = default;
};

}  // namespace qbranch
