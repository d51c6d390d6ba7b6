#pragma once

#include <Eigen/Dense>
#include <array>
#include <map>

#include "qbranch/report.hpp"

namespace qbranch {

using Mat8 = Eigen::Matrix<double, 8, 8>;

// Signed epsilon-coordinate root of so(8): sum of si*eps_i with si in
// {-1,0,1} and exactly two nonzero entries.
struct So8Root {
    std::array<int, 4> e{};
    friend bool operator<(const So8Root& a, const So8Root& b) { return a.e < b.e; }
    friend bool operator==(const So8Root& a, const So8Root& b) { return a.e == b.e; }
    So8Root operator-() const {
        So8Root r;
        for (int i = 0; i < 4; ++i) r.e[i] = -e[i];
        return r;
    }
};

// Matrix realization of so(8,C) adapted to so(4,4): Chevalley generators
// normalized to [X_d, X_{-d}] = H_d, theta acting by conjugation with the
// signature matrix that fixes the compact roots {eps1 +- eps2, eps3 +- eps4}.
// All structure constants here are real, so everything lives in real 8x8
// matrices.
class So8Realization {
  public:
    So8Realization();

    Mat8 cartan(int i) const;              // dual of eps_{i+1}, i in 0..3
    Mat8 root_vector(const So8Root& r) const;
    Mat8 coroot(const So8Root& r) const;   // H_r
    Mat8 theta(const Mat8& x) const;

    static double killing(const Mat8& a, const Mat8& b) { return (a * b).trace(); }

    // simple roots d1..d4 and the strongly orthogonal noncompact roots
    So8Root delta(int j) const;   // j in 1..4
    So8Root gamma(int j) const;   // j in 1..4
    So8Root beta() const;         // eps1 + eps2

    // Cayley transform c_gamma = Ad(exp(pi/4 (X_{-g} - X_g))) as an 8x8
    // conjugation; matrix exponential by scaling and squaring.
    Mat8 cayley_factor(const So8Root& g) const;

    // Composed transform applied to x, factors in the given order.
    Mat8 cayley(const Mat8& x, const std::array<int, 4>& order = {1, 2, 3, 4}) const;

    // Z_{alpha_j} = c(X_{delta_j}) + theta(c(X_{delta_j}))
    Mat8 compute_Z(int j, const std::array<int, 4>& order = {1, 2, 3, 4}) const;

    // Coefficients of the projection of x onto sl2_r = <H_r, X_r, X_{-r}>
    // along the trace-orthogonal ideal decomposition of k.
    struct Sl2Coeffs {
        double h, e, f;
    };
    Sl2Coeffs project(const Mat8& x, const So8Root& r) const;

  private:
    std::map<So8Root, Mat8> root_vectors_;
    Mat8 signature_;
};

Mat8 expm(const Mat8& a);

// Constructs the realization and asserts its bracket invariants; throws on
// any violation.
So8Realization build_so8(double tol = 1e-10);

// Numeric verification of the projection tables P_beta(Z_{alpha_j}) and
// P_{delta_i}(Z_{alpha_j}); tolerance 1e-10. EF-type values are asserted up
// to one phase per target sl2 (the free phase of the compact root vectors,
// pinned by the B(Z,Z)-normalization); the realized frame is recorded in
// the report.
Report verify_projection_tables(double tol = 1e-10);

// Bracket, Cayley-invariance and theta-splitting checks of the realization.
Report verify_so8_realization(double tol = 1e-10);

}  // namespace qbranch
