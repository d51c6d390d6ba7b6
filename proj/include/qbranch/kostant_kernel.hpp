#pragma once

#include <vector>

#include "qbranch/catalog.hpp"
#include "qbranch/numeric.hpp"

namespace qbranch {

// Square matrix with rational entries num/den, den a single positive scalar.
struct MatQ {
    int n = 0;
    BigInt den = 1;
    std::vector<BigInt> num;  // row-major, n*n

    static MatQ zero(int n) {
        MatQ m;
        m.n = n;
        m.num.assign((size_t)n * n, 0);
        return m;
    }
    BigInt& at(int i, int j) { return num[(size_t)i * n + j]; }
    const BigInt& at(int i, int j) const { return num[(size_t)i * n + j]; }
};

// diag(-d, -d+1, ..., d), size 2d+1.
MatQ build_m1(Int d);

// -1/2 * tridiagonal(super 1..2d, sub 2d..1), size 2d+1: the weight-basis
// action of the (X + X^-)/2 side after clearing the sl2 normalization.
MatQ build_m2(Int d);

// Kac-Sylvester matrix: super (2d,...,1), sub (1,...,2d); equals -2*M2(d)^T.
MatQ kac_sylvester(Int d);

// Eigenvector u_{2k} of K(2d) for eigenvalue 2k: coordinates indexed by
// j = -d..d, u_{2k,2j} = [x^{d+k}] (1-x)^{d+j} (1+x)^{d-j}.
std::vector<BigInt> ks_eigenvector(Int k, Int d);

// Polynomial given by its linear factors: p(t) = prod (t - r).
struct PolyRoots {
    std::vector<Frac> roots;
};

// roots l, l-2, ..., -l (degree l+1); l = -1 gives the empty product.
PolyRoots step_two_poly(Int l);

// Integer-root subproduct of p_l(c t): the factors of prod_j (t - (l-2j)/c)
// with integral root, again a step-two set; empty when none exist.
PolyRoots integer_subproduct(Int l, Int c);

struct KernelConstraint {
    PolyRoots p;
    MatQ m;
};

struct KernelProblem {
    Int d = 0;
    std::vector<KernelConstraint> constraints;
};

// dim of the intersection of ker p_i(A_i): evaluates each polynomial at its
// matrix exactly, stacks the results and runs fraction-free elimination.
Int joint_kernel_dim(const KernelProblem& problem);

// Closed form for dim(ker p_l1(M1(d)) cap ker p_l2(M2(d))).
Int closed_form_joint_kernel(Int d, Int lambda1, Int lambda2);

// Rank of an integer matrix (rows x cols), exact.
Int integer_matrix_rank(std::vector<std::vector<BigInt>> rows, int cols);

enum class G2Side { beta, alpha2 };

// Multiplicity of Gamma_m x 1 in V(lambda) via the joint-kernel criterion,
// assembled from the pair's projection table. For g2 the side selects which
// sl2 ideal carries Gamma_m; g2_direct_scaling evaluates the scaled-root
// polynomial directly instead of reducing to its integer-root subproduct.
Int kostant_multiplicity(const QuaternionicPair& p, const IVec& lambda, Int m,
                         G2Side side = G2Side::beta, bool g2_direct_scaling = false);

}  // namespace qbranch
