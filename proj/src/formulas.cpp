#include "qbranch/formulas.hpp"

#include <algorithm>
#include <sstream>

namespace qbranch {

namespace {

void require_dominant(const QuaternionicPair& p, const IVec& lambda) {
    if ((int)lambda.size() != p.g.rank) {
        std::ostringstream os;
        os << "lambda must have " << p.g.rank << " coordinates, got " << lambda.size();
        throw std::invalid_argument(os.str());
    }
    if (!p.g.is_dominant(lambda))
        throw std::invalid_argument("lambda must be dominant (all coordinates >= 0)");
}

Int b_of(Int lambda_i, Int d) { return std::min(lambda_i, d - mod2(lambda_i - d)); }

// lambda_2' of the g2 long-root reduction: the largest l = lambda_2 (mod 2)
// with 3l <= lambda_2, or -1 when no integral root exists.
Int g2_lambda2_prime(Int lambda2) {
    return lambda2 % 3 == 1 ? lambda2 / 3 - 1 : lambda2 / 3;
}

bool off_node_real_parity(const QuaternionicPair& p, const IVec& lambda) {
    for (int j : p.real_nodes()) {
        if (j == p.attach_node || j == p.second_node) continue;
        if (mod2(lambda[j]) != 0) return false;
    }
    return true;
}

MultResult finish(std::vector<Condition> conds, Int value_if_eligible) {
    MultResult r;
    r.conditions = std::move(conds);
    r.value = r.eligible() ? value_if_eligible : 0;
    return r;
}

}  // namespace

MultResult mult_exceptional(const QuaternionicPair& p, const IVec& lambda, Int m) {
    if (!is_exceptional(p.family) || p.family == PairFamily::g2)
        throw std::invalid_argument("mult_exceptional applies to e6/e7/e8/f4");
    require_dominant(p, lambda);
    if (m < 0) throw std::invalid_argument("m must be >= 0");

    Int d = m / 2;
    Int l1 = lambda[p.attach_node], l2 = lambda[p.second_node];
    Int b1 = b_of(l1, d), b2 = b_of(l2, d);
    std::vector<Condition> conds = {
        {"m = 2d is even", m % 2 == 0},
        {"lambda restricts to zero on h_m", hm_vanishes(p, lambda)},
        {"b1 + b2 >= d", b1 + b2 >= d},
        {"even coordinates at real simple roots off the active nodes",
         off_node_real_parity(p, lambda)},
    };
    return finish(std::move(conds), floor_div(b1 + b2 - d + 2, 2));
}

MultResult twistor_exceptional(const QuaternionicPair& p, const IVec& lambda) {
    if (!is_exceptional(p.family) || p.family == PairFamily::g2)
        throw std::invalid_argument("twistor_exceptional applies to e6/e7/e8/f4");
    require_dominant(p, lambda);
    Int l1 = lambda[p.attach_node], l2 = lambda[p.second_node];
    std::vector<Condition> conds = {
        {"lambda restricts to zero on h_m", hm_vanishes(p, lambda)},
        {"even coordinates at real simple roots off the active nodes",
         off_node_real_parity(p, lambda)},
    };
    return finish(std::move(conds), floor_div((l1 + 1) * (l2 + 1) + 1, 2));
}

MultResult mult_g2(const QuaternionicPair& p, const IVec& lambda, Int m, G2Side side) {
    if (p.family != PairFamily::g2) throw std::invalid_argument("mult_g2 applies to g2 only");
    require_dominant(p, lambda);
    if (m < 0) throw std::invalid_argument("m must be >= 0");

    Int d = m / 2;
    Int l1 = lambda[0];
    Int l2 = side == G2Side::beta ? g2_lambda2_prime(lambda[1]) : lambda[1];
    Int b1 = b_of(l1, d);
    Int b2 = l2 < 0 ? -1 : b_of(l2, d);
    std::vector<Condition> conds = {
        {"m = 2d is even", m % 2 == 0},
        {side == G2Side::beta ? "b1 + b2' >= d" : "b1 + b2 >= d", b1 + b2 >= d},
    };
    return finish(std::move(conds), floor_div(b1 + b2 - d + 2, 2));
}

MultResult twistor_g2(const QuaternionicPair& p, const IVec& lambda, G2Side side) {
    if (p.family != PairFamily::g2) throw std::invalid_argument("twistor_g2 applies to g2 only");
    require_dominant(p, lambda);
    Int l1 = lambda[0];
    if (side == G2Side::alpha2) {
        MultResult r;
        r.value = floor_div((l1 + 1) * (lambda[1] + 1) + 1, 2);
        return r;
    }
    Int l2p = g2_lambda2_prime(lambda[1]);
    std::vector<Condition> conds = {{"lambda_2 != 1", lambda[1] != 1}};
    return finish(std::move(conds), l2p < 0 ? 0 : floor_div((l1 + 1) * (l2p + 1) + 1, 2));
}

MultResult mult_formula(const QuaternionicPair& p, const IVec& lambda, Int m, G2Side side) {
    return p.family == PairFamily::g2 ? mult_g2(p, lambda, m, side)
                                      : mult_exceptional(p, lambda, m);
}

MultResult twistor_formula(const QuaternionicPair& p, const IVec& lambda, G2Side side) {
    return p.family == PairFamily::g2 ? twistor_g2(p, lambda, side)
                                      : twistor_exceptional(p, lambda);
}

std::map<Int, Int> mult_series(const QuaternionicPair& p, const IVec& lambda, G2Side side) {
    require_dominant(p, lambda);
    std::map<Int, Int> out;
    Int bound = lambda[p.attach_node] + lambda[p.second_node];
    for (Int d = 0; d <= bound; ++d) {
        Int v = mult_formula(p, lambda, 2 * d, side).value;
        if (v > 0) out[d] = v;
    }
    return out;
}

// --- classical ---------------------------------------------------------------

void validate_classical_weight(PairFamily family, int n, const IVec& lambda) {
    auto decreasing_through = [&](size_t upto) {
        for (size_t i = 0; i + 1 <= upto; ++i)
            if (lambda[i] < lambda[i + 1])
                throw std::invalid_argument("lambda must be weakly decreasing");
    };
    switch (family) {
        case PairFamily::u: {
            if (n < 2) throw std::invalid_argument("family u requires n >= 2");
            if ((int)lambda.size() != n + 2)
                throw std::invalid_argument("family u expects n+2 coordinates");
            decreasing_through(lambda.size() - 1);
            return;
        }
        case PairFamily::so: {
            if (n < 4) throw std::invalid_argument("family so requires n >= 4");
            size_t arity = (n % 2 == 0) ? (n + 4) / 2 : (n + 3) / 2;
            if (lambda.size() != arity)
                throw std::invalid_argument("family so expects [(n+4)/2] coordinates");
            decreasing_through(lambda.size() - 2);
            Int last = lambda.back();
            if (n % 2 == 0) {
                if (lambda[lambda.size() - 2] < std::abs(last))
                    throw std::invalid_argument(
                        "lambda must satisfy l_1 >= ... >= |l_last| (even orthogonal)");
            } else if (last < 0) {
                throw std::invalid_argument("lambda must be non-negative (odd orthogonal)");
            }
            return;
        }
        case PairFamily::sp: {
            if (n < 1) throw std::invalid_argument("family sp requires n >= 1");
            if ((int)lambda.size() != n + 1)
                throw std::invalid_argument("family sp expects n+1 coordinates");
            decreasing_through(lambda.size() - 1);
            if (lambda.back() < 0)
                throw std::invalid_argument("lambda must be non-negative (symplectic)");
            return;
        }
        default:
            throw std::invalid_argument("not a classical family");
    }
}

namespace {

bool u_support_ok(int n, const IVec& l) {
    for (int i = 2; i <= n - 1; ++i)
        if (l[i] != 0) return false;
    return l[1] >= 0 && l[n] <= 0;
}

}  // namespace

std::vector<std::pair<Int, Int>> u_fixed_space(int n, const IVec& lambda) {
    validate_classical_weight(PairFamily::u, n, lambda);
    std::vector<std::pair<Int, Int>> out;
    if (!u_support_ok(n, lambda)) return out;
    Int a = lambda[0], b = lambda[1], c = lambda[n], e = lambda[n + 1];
    Int kmax = std::min(a - b, c - e);
    for (Int k = 0; k <= kmax; ++k) out.emplace_back(a + c - k, b + e + k);
    return out;
}

MultResult u_twistor(int n, const IVec& lambda) {
    validate_classical_weight(PairFamily::u, n, lambda);
    Int a = lambda[0], b = lambda[1], c = lambda[n], e = lambda[n + 1];
    std::vector<Condition> conds = {
        {"lambda_3 = ... = lambda_n = 0 and lambda_2 >= 0 >= lambda_{n+1}",
         u_support_ok(n, lambda)},
        {"lambda_1 - lambda_2 + lambda_{n+1} - lambda_{n+2} is even",
         mod2(a - b + c - e) == 0},
    };
    return finish(std::move(conds), std::min(a - b, c - e) + 1);
}

MultResult u_mult(int n, const IVec& lambda, Int m) {
    validate_classical_weight(PairFamily::u, n, lambda);
    if (m < 0) throw std::invalid_argument("m must be >= 0");
    MultResult r;
    r.conditions.push_back({"fixed space nonzero", u_support_ok(n, lambda)});
    r.conditions.push_back({"m even (trivial central character)", m % 2 == 0});
    if (!r.eligible()) return r;
    for (auto [n1, n2] : u_fixed_space(n, lambda))
        if (n1 - n2 == m && n1 + n2 == 0) r.value += 1;
    return r;
}

MultResult u4_to_so4(const IVec& lambda4, Int m) {
    if (lambda4.size() != 4) throw std::invalid_argument("u4_to_so4 expects 4 coordinates");
    for (int i = 0; i + 1 < 4; ++i)
        if (lambda4[i] < lambda4[i + 1])
            throw std::invalid_argument("lambda must be weakly decreasing");
    if (m < 0) throw std::invalid_argument("m must be >= 0");
    Int a1 = lambda4[0] - lambda4[1], a2 = lambda4[1] - lambda4[2], a3 = lambda4[2] - lambda4[3];
    Int d = m / 2;
    Int l1 = std::min(a1, a3), l2 = a2;
    Int b1 = b_of(l1, d), b2 = b_of(l2, d);
    std::vector<Condition> conds = {
        {"m = 2d is even", m % 2 == 0},
        {"lambda_1 - lambda_2 = lambda_3 - lambda_4 mod 2", mod2(a1 - a3) == 0},
        {"b1 + b2 >= d", b1 + b2 >= d},
    };
    return finish(std::move(conds), floor_div(b1 + b2 - d + 2, 2));
}

Int u4_to_so4_kernel(const IVec& lambda4, Int m) {
    if (m % 2 != 0) return 0;  // half-integral spectrum on Gamma_m otherwise
    Int d = m / 2;
    Int a1 = lambda4[0] - lambda4[1], a2 = lambda4[1] - lambda4[2], a3 = lambda4[2] - lambda4[3];
    KernelProblem prob;
    prob.d = d;
    prob.constraints.push_back({step_two_poly(a1), build_m1(d)});
    prob.constraints.push_back({step_two_poly(a2), build_m2(d)});
    prob.constraints.push_back({step_two_poly(a3), build_m1(d)});
    return joint_kernel_dim(prob);
}

SoFixedSpace so_fixed_space(int n, const IVec& lambda) {
    validate_classical_weight(PairFamily::so, n, lambda);
    SoFixedSpace out;
    for (size_t i = 4; i < lambda.size(); ++i)
        if (lambda[i] != 0) return out;
    out.nonzero = true;
    out.u4_weight = {lambda[0], lambda[1], lambda.size() > 2 ? lambda[2] : 0,
                     lambda.size() > 3 ? std::abs(lambda[3]) : 0};
    return out;
}

MultResult so_mult(int n, const IVec& lambda, Int m) {
    SoFixedSpace fs = so_fixed_space(n, lambda);
    if (!fs.nonzero) {
        MultResult r;
        r.conditions.push_back({"lambda_5 = lambda_6 = ... = 0", false});
        return r;
    }
    MultResult r = u4_to_so4(fs.u4_weight, m);
    r.conditions.insert(r.conditions.begin(), {"lambda_5 = lambda_6 = ... = 0", true});
    return r;
}

MultResult so_twistor(int n, const IVec& lambda) {
    validate_classical_weight(PairFamily::so, n, lambda);
    bool tail = true;
    for (size_t i = 4; i < lambda.size(); ++i)
        if (lambda[i] != 0) tail = false;
    Int l1 = lambda[0], l2 = lambda[1];
    Int l3 = lambda.size() > 2 ? lambda[2] : 0;
    Int l4 = lambda.size() > 3 ? std::abs(lambda[3]) : 0;
    Int lp1 = std::min(l1 - l2, l3 - l4), lp2 = l2 - l3;
    std::vector<Condition> conds = {
        {"lambda_5 = lambda_6 = ... = 0", tail},
        {"lambda_1 - lambda_2 + lambda_3 - |lambda_4| is even", mod2(l1 - l2 + l3 - l4) == 0},
    };
    return finish(std::move(conds), floor_div((lp1 + 1) * (lp2 + 1) + 1, 2));
}

SpFixedSpace sp_fixed_space(int n, const IVec& lambda) {
    validate_classical_weight(PairFamily::sp, n, lambda);
    SpFixedSpace out;
    for (size_t i = 2; i < lambda.size(); ++i)
        if (lambda[i] != 0) return out;
    out.nonzero = true;
    out.sl2_label = lambda[0] - lambda[1];
    return out;
}

MultResult sp_mult(int n, const IVec& lambda, Int m) {
    SpFixedSpace fs = sp_fixed_space(n, lambda);
    MultResult r;
    r.conditions.push_back({"lambda_3 = ... = lambda_{n+1} = 0", fs.nonzero});
    if (fs.nonzero) r.value = (m == fs.sl2_label) ? 1 : 0;
    return r;
}

MultResult sp_twistor(int n, const IVec& lambda) {
    validate_classical_weight(PairFamily::sp, n, lambda);
    // Conditions: the Sp(n)-fixed space S^{l1-l2} is nonzero and carries a
    // zero weight. l2 itself need not vanish; it enters only through the
    // parity of l1 - l2 (restriction in stages from the fixed space).
    bool tail = true;
    for (size_t i = 2; i < lambda.size(); ++i)
        if (lambda[i] != 0) tail = false;
    std::vector<Condition> conds = {
        {"lambda_3 = ... = lambda_{n+1} = 0", tail},
        {"lambda_1 - lambda_2 is even", mod2(lambda[0] - lambda[1]) == 0},
    };
    return finish(std::move(conds), 1);
}

}  // namespace qbranch
