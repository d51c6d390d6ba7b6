#include "qbranch/kostant_kernel.hpp"

#include <algorithm>
#include <numeric>

namespace qbranch {

MatQ build_m1(Int d) {
    if (d < 0) throw std::invalid_argument("build_m1: d must be >= 0");
    int n = (int)(2 * d + 1);
    MatQ m = MatQ::zero(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = -d + i;
    return m;
}

MatQ build_m2(Int d) {
    if (d < 0) throw std::invalid_argument("build_m2: d must be >= 0");
    int n = (int)(2 * d + 1);
    MatQ m = MatQ::zero(n);
    m.den = 2;
    for (int i = 0; i + 1 < n; ++i) {
        m.at(i, i + 1) = -(i + 1);      // super: 1, 2, ..., 2d
        m.at(i + 1, i) = -(2 * d - i);  // sub: 2d, ..., 2, 1
    }
    return m;
}

MatQ kac_sylvester(Int d) {
    if (d < 0) throw std::invalid_argument("kac_sylvester: d must be >= 0");
    int n = (int)(2 * d + 1);
    MatQ m = MatQ::zero(n);
    for (int i = 0; i + 1 < n; ++i) {
        m.at(i, i + 1) = 2 * d - i;  // super: 2d, ..., 1
        m.at(i + 1, i) = i + 1;      // sub: 1, ..., 2d
    }
    return m;
}

namespace {

BigInt binom(Int n, Int k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (Int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

}  // namespace

std::vector<BigInt> ks_eigenvector(Int k, Int d) {
    if (k < -d || k > d) throw std::invalid_argument("ks_eigenvector: k out of range");
    std::vector<BigInt> u;
    u.reserve((size_t)(2 * d + 1));
    for (Int j = -d; j <= d; ++j) {
        // [x^{d+k}] (1-x)^{d+j} (1+x)^{d-j}
        BigInt c = 0;
        for (Int i = 0; i <= std::min(d + j, d + k); ++i) {
            BigInt t = binom(d + j, i) * binom(d - j, d + k - i);
            if (i % 2 == 0)
                c += t;
            else
                c -= t;
        }
        u.push_back(c);
    }
    return u;
}

PolyRoots step_two_poly(Int l) {
    PolyRoots p;
    for (Int r = l; r >= -l; r -= 2) p.roots.push_back(Frac(r));
    return p;
}

PolyRoots integer_subproduct(Int l, Int c) {
    if (c <= 0 || c % 2 == 0)
        throw std::invalid_argument("integer_subproduct: scale must be odd positive");
    // Integral values among (l-2j)/c: the k with ck = l mod 2, |ck| <= l.
    Int lp = -1;
    for (Int k = l / c; k >= 0; --k) {
        if (mod2(c * k) == mod2(l)) { lp = k; break; }
    }
    return step_two_poly(lp);
}

namespace {

// P <- F * P where F = scale*A - r*I and A is tridiagonal (num side);
// exploits the three-diagonal structure of our matrices.
void apply_tridiag_factor(std::vector<BigInt>& p, const MatQ& a, const BigInt& scale,
                          const BigInt& r) {
    const int n = a.n;
    std::vector<BigInt> out((size_t)n * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            BigInt acc = 0;
            for (int k = std::max(0, i - 1); k <= std::min(n - 1, i + 1); ++k) {
                if (a.at(i, k) == 0 && k != i) continue;
                BigInt f = scale * a.at(i, k);
                if (k == i) f -= r;
                if (f != 0) acc += f * p[(size_t)k * n + j];
            }
            out[(size_t)i * n + j] = std::move(acc);
        }
    }
    p = std::move(out);
}

std::vector<BigInt> evaluate_poly_at_matrix(const PolyRoots& poly, const MatQ& a) {
    const int n = a.n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (std::abs(i - j) > 1 && a.at(i, j) != 0)
                throw std::invalid_argument("joint_kernel_dim: matrices must be tridiagonal");
    std::vector<BigInt> p((size_t)n * n, 0);
    for (int i = 0; i < n; ++i) p[(size_t)i * n + i] = 1;
    for (const Frac& root : poly.roots) {
        // (A - r I) scaled by den(A)*den(r): (rden*Anum - rnum*Aden*I)
        apply_tridiag_factor(p, a, BigInt(root.den), BigInt(root.num) * a.den);
        // Rescaling columns commutes with the remaining left factors and
        // only multiplies kernel vectors componentwise, so the kernel
        // dimension of the final product is unchanged; it keeps the
        // intermediate entries small.
        for (int j = 0; j < n; ++j) {
            BigInt g = 0;
            for (int i = 0; i < n; ++i) {
                const BigInt& x = p[(size_t)i * n + j];
                if (x != 0) g = gcd(g, abs(x));
                if (g == 1) break;
            }
            if (g > 1)
                for (int i = 0; i < n; ++i) p[(size_t)i * n + j] /= g;
        }
    }
    return p;
}

void strip_row_content(std::vector<BigInt>& row) {
    BigInt g = 0;
    for (const auto& x : row) {
        if (x != 0) g = gcd(g, abs(x));
        if (g == 1) return;
    }
    if (g > 1)
        for (auto& x : row) x /= g;
}

}  // namespace

Int integer_matrix_rank(std::vector<std::vector<BigInt>> rows, int cols) {
    for (auto& r : rows) strip_row_content(r);
    int rank = 0;
    for (int c = 0; c < cols && rank < (int)rows.size(); ++c) {
        // pivot: smallest nonzero entry in column c keeps growth down
        int piv = -1;
        for (int i = rank; i < (int)rows.size(); ++i) {
            if (rows[i][c] == 0) continue;
            if (piv < 0 || abs(rows[i][c]) < abs(rows[piv][c])) piv = i;
        }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        const std::vector<BigInt>& pivot_row = rows[rank];
        const BigInt p = pivot_row[c];
        for (int i = rank + 1; i < (int)rows.size(); ++i) {
            auto& r = rows[i];
            if (r[c] == 0) continue;
            const BigInt f = r[c];
            for (int j = c; j < cols; ++j) r[j] = r[j] * p - pivot_row[j] * f;
            strip_row_content(r);
        }
        ++rank;
        rows.erase(std::remove_if(rows.begin() + rank, rows.end(),
                                  [](const std::vector<BigInt>& r) {
                                      return std::all_of(r.begin(), r.end(),
                                                         [](const BigInt& x) { return x == 0; });
                                  }),
                   rows.end());
    }
    return rank;
}

Int joint_kernel_dim(const KernelProblem& problem) {
    if (problem.constraints.empty())
        throw std::invalid_argument("joint_kernel_dim: no constraints");
    const int n = problem.constraints.front().m.n;
    std::vector<std::vector<BigInt>> stacked;
    for (const auto& con : problem.constraints) {
        if (con.m.n != n) throw std::invalid_argument("joint_kernel_dim: size mismatch");
        auto p = evaluate_poly_at_matrix(con.p, con.m);
        for (int i = 0; i < n; ++i) {
            std::vector<BigInt> row(p.begin() + (size_t)i * n, p.begin() + (size_t)(i + 1) * n);
            bool nonzero = std::any_of(row.begin(), row.end(), [](const BigInt& x) { return x != 0; });
            if (nonzero) stacked.push_back(std::move(row));
        }
    }
    return n - integer_matrix_rank(std::move(stacked), n);
}

Int closed_form_joint_kernel(Int d, Int lambda1, Int lambda2) {
    if (d < 0 || lambda1 < 0 || lambda2 < 0)
        throw std::invalid_argument("closed_form_joint_kernel: negative argument");
    Int e1 = mod2(lambda1 - d), e2 = mod2(lambda2 - d);
    Int b1 = std::min(lambda1, d - e1), b2 = std::min(lambda2, d - e2);
    if (b1 + b2 < d) return 0;
    return floor_div(b1 + b2 - d + 2, 2);
}

Int kostant_multiplicity(const QuaternionicPair& p, const IVec& lambda, Int m, G2Side side,
                         bool g2_direct_scaling) {
    if (!is_exceptional(p.family))
        throw std::invalid_argument("kostant_multiplicity: exceptional pairs only");
    if ((int)lambda.size() != p.g.rank)
        throw std::invalid_argument("kostant_multiplicity: wrong weight arity");
    if (!p.g.is_dominant(lambda))
        throw std::invalid_argument("kostant_multiplicity: non-dominant weight");
    if (m < 0) throw std::invalid_argument("kostant_multiplicity: m must be >= 0");
    if (side == G2Side::alpha2 && p.family != PairFamily::g2)
        throw std::invalid_argument("kostant_multiplicity: alpha2 side exists only for g2");

    if (!hm_vanishes(p, lambda)) return 0;
    auto table = projection_table(p, p.family == PairFamily::g2 && side == G2Side::alpha2);
    // Real simple roots acting by zero force even coordinates.
    for (int j : p.real_nodes()) {
        auto it = table.find(j);
        bool zero = (it == table.end()) || it->second.kind == ProjectionKind::zero;
        if (zero && mod2(lambda[j]) != 0) return 0;
    }
    // -1/2 H_beta has integer spectrum on Gamma_m only for even m.
    if (m % 2 != 0) return 0;
    Int d = m / 2;

    KernelProblem problem;
    problem.d = d;
    for (auto& [node, value] : table) {
        if (value.kind == ProjectionKind::zero) continue;
        Int l = lambda[node];
        if (value.h.num != 0) {
            problem.constraints.push_back({step_two_poly(l), build_m1(d)});
        } else {
            // Operator c*(X + X^-)/2 acts as a multiple of M2(d); the kernel
            // of q_l at scale s reduces to roots (l-2j)/s on M2.
            Frac scale = value.ef * Frac(2);
            Int s = scale.num < 0 ? -scale.num : scale.num;
            if (scale.den != 1) throw std::logic_error("unexpected projection scale");
            if (s == 1) {
                problem.constraints.push_back({step_two_poly(l), build_m2(d)});
            } else if (g2_direct_scaling) {
                PolyRoots q;
                for (Int r = l; r >= -l; r -= 2) q.roots.push_back(Frac(r, s));
                problem.constraints.push_back({q, build_m2(d)});
            } else {
                problem.constraints.push_back({integer_subproduct(l, s), build_m2(d)});
            }
        }
    }
    return joint_kernel_dim(problem);
}

}  // namespace qbranch
