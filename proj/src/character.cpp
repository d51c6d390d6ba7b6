#include "qbranch/character.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <unordered_set>

namespace qbranch {

WeightKey vec_to_key(const IVec& v) {
    if (v.size() > 8) throw std::invalid_argument("weight rank > 8 unsupported");
    WeightKey k;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] < std::numeric_limits<std::int16_t>::min() ||
            v[i] > std::numeric_limits<std::int16_t>::max())
            throw std::overflow_error("weight coordinate out of int16 range");
        k.c[i] = (std::int16_t)v[i];
    }
    return k;
}

IVec key_to_vec(const WeightKey& k, int rank) {
    IVec v(rank);
    for (int i = 0; i < rank; ++i) v[i] = k.c[i];
    return v;
}

namespace {

// Scaled invariant form on weights: G_int = L * Gram(fundamental weights),
// integer entries; L returned.
void weight_gram(const RootSystem& rs, std::vector<IVec>& g, Int& L) {
    int r = rs.rank;
    // (w_i, w_j) = d_j * (A^{-1})_{ji} = sym[j] * inv_num[j][i] / det
    L = rs.cartan_det;
    g.assign(r, IVec(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) g[i][j] = rs.sym[j] * rs.cartan_inv_num[j][i];
    // Reduce by common gcd to keep numbers small.
    Int cg = L;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) cg = std::gcd(cg, g[i][j] < 0 ? -g[i][j] : g[i][j]);
    if (cg > 1) {
        L /= cg;
        for (auto& row : g)
            for (auto& x : row) x /= cg;
    }
}

}  // namespace

Character freudenthal(const RootSystem& rs, const IVec& lambda, Int dim_cap) {
    const int r = rs.rank;
    if ((int)lambda.size() != r) throw std::invalid_argument("freudenthal: wrong weight arity");
    if (!rs.is_dominant(lambda)) throw std::invalid_argument("freudenthal: non-dominant weight");
    if (r > 8) throw std::invalid_argument("freudenthal: rank > 8 unsupported");

    BigInt dim = rs.weyl_dimension(lambda);
    if (dim > dim_cap) {
        std::ostringstream os;
        os << "freudenthal: dimension " << dim << " exceeds cap " << dim_cap;
        throw std::invalid_argument(os.str());
    }

    // Weight set by saturation from the top: nu - a_i is a weight iff its
    // dominant representative mu satisfies lambda - mu in Q+ (root lattice,
    // non-negative coordinates).
    auto member = [&](const IVec& nu) -> bool {
        IVec dom = rs.dominant_representative(nu);
        IVec diff(r);
        for (int i = 0; i < r; ++i) diff[i] = lambda[i] - dom[i];
        auto c = rs.fund_to_root(diff);
        if (!c) return false;
        for (Int x : *c)
            if (x < 0) return false;
        return true;
    };

    std::unordered_set<WeightKey, WeightKeyHash> wts;
    std::vector<std::vector<IVec>> dominant_by_level;  // recursion order
    std::vector<IVec> level = {lambda};
    wts.insert(vec_to_key(lambda));
    dominant_by_level.push_back({lambda});
    while (!level.empty()) {
        std::vector<IVec> next;
        std::vector<IVec> next_dom;
        for (const auto& nu : level) {
            for (int i = 0; i < r; ++i) {
                IVec down(r);
                for (int k = 0; k < r; ++k) down[k] = nu[k] - rs.cartan[k][i];
                WeightKey key = vec_to_key(down);
                if (wts.count(key)) continue;
                if (!member(down)) continue;
                wts.insert(key);
                next.push_back(down);
                if (rs.is_dominant(down)) next_dom.push_back(down);
            }
        }
        if (!next.empty()) dominant_by_level.push_back(std::move(next_dom));
        level = std::move(next);
    }

    std::vector<IVec> gram;
    Int L;
    weight_gram(rs, gram, L);
    auto norm2L = [&](const IVec& x) {
        Int s = 0;
        for (int i = 0; i < r; ++i) {
            if (x[i] == 0) continue;
            Int row = 0;
            for (int j = 0; j < r; ++j) row += gram[i][j] * x[j];
            s = checked_add(s, checked_mul(x[i], row));
        }
        return s;
    };
    IVec lam_rho(r);
    for (int i = 0; i < r; ++i) lam_rho[i] = lambda[i] + 1;
    const Int top_norm = norm2L(lam_rho);

    std::unordered_map<WeightKey, Int, WeightKeyHash> dom_mult;
    dom_mult[vec_to_key(lambda)] = 1;

    const size_t npos = rs.positive_roots.size();
    for (size_t lev = 1; lev < dominant_by_level.size(); ++lev) {
        for (const auto& mu : dominant_by_level[lev]) {
            Int acc = 0;
            IVec x(r);
            for (size_t a = 0; a < npos; ++a) {
                const IVec& af = rs.pos_root_fund[a];
                const IVec& ac = rs.positive_roots[a];
                // (mu + k*alpha, alpha), unscaled integer; step per k is (alpha,alpha).
                Int base = 0;
                for (int j = 0; j < r; ++j) base += ac[j] * rs.sym[j] * mu[j];
                const Int step = 2 * rs.pos_root_halfnorm[a];
                x = mu;
                for (Int k = 1;; ++k) {
                    for (int j = 0; j < r; ++j) x[j] += af[j];
                    if (!wts.count(vec_to_key(x))) break;
                    IVec dom = rs.dominant_representative(x);
                    Int m = dom_mult.at(vec_to_key(dom));
                    acc = checked_add(acc, checked_mul(m, base + k * step));
                }
            }
            IVec mu_rho(r);
            for (int i = 0; i < r; ++i) mu_rho[i] = mu[i] + 1;
            Int denom = top_norm - norm2L(mu_rho);
            if (denom <= 0) throw std::logic_error("freudenthal: non-positive denominator");
            Int num = checked_mul(2 * L, acc);
            if (num % denom != 0) throw std::logic_error("freudenthal: non-integral multiplicity");
            dom_mult[vec_to_key(mu)] = num / denom;
        }
    }

    Character ch;
    ch.rank = r;
    ch.entries.reserve(wts.size());
    for (const auto& key : wts) {
        IVec nu = key_to_vec(key, r);
        IVec dom = rs.dominant_representative(nu);
        ch.entries.emplace(key, dom_mult.at(vec_to_key(dom)));
    }
    return ch;
}

}  // namespace qbranch
