#pragma once

#include <vector>

#include "qbranch/catalog.hpp"
#include "qbranch/report.hpp"

namespace qbranch {

// Exhaustive check of the closed-form joint kernel against fraction-free
// elimination: all d <= max_d, all 0 <= l1, l2 <= max_lambda.
Report run_kernel_suite(Int max_d = 20, Int max_lambda = 41);

// Kac-Sylvester spectra, eigenvector symmetries and independence.
Report run_ks_suite(Int max_d = 50, Int independence_max_d = 20);

// so(4,4) realization, Cayley transforms, the projection tables and the
// D4-subsystem data of the rank-4 pairs.
Report run_d4_suite(double tol = 1e-10);

// Triple agreement formula = kernel = oracle on the two active nodes of the
// given pairs (all of them when empty), with the twistor identity and the g2
// spot checks; lambda coordinates up to max_coord, every m up to
// 2(l1+l2) + 2, weights above max_dim skipped.
Report run_oracle_suite(std::vector<PairFamily> pairs = {}, Int max_coord = 2,
                        Int max_dim = 1000000);

// Knapp-style classical formulas against the brute-force oracle.
Report run_classical_suite(Int max_dim = 1000000);

}  // namespace qbranch
