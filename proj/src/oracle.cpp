#include "qbranch/oracle.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

#include "qbranch/cache.hpp"
#include "qbranch/formulas.hpp"

namespace qbranch {

namespace {

struct Ideal {
    RootSystem rs;
    std::vector<int> coord_pos;  // positions in the k-coordinate vector
};

struct KContext {
    int rank = 0;
    std::vector<Ideal> ideals;
    IVec height_weight;  // integer functional, positive on k-positive roots

    explicit KContext(const QuaternionicPair& p) {
        if (!is_exceptional(p.family))
            throw std::invalid_argument("restriction context requires an exceptional pair");
        rank = p.g.rank;
        int pos = 1;
        ideals.push_back({build_root_system(SimpleType::A, 1), {0}});
        for (size_t i = 1; i < p.k_ideals.size(); ++i) {
            const KIdeal& ki = p.k_ideals[i];
            Ideal ideal{build_root_system(ki.type, ki.rank), {}};
            for (int r = 0; r < ki.rank; ++r) ideal.coord_pos.push_back(pos++);
            ideals.push_back(std::move(ideal));
        }
        // h(nu) = sum of the simple-root coordinates of nu over each ideal,
        // scaled to a common integer denominator.
        Int lcm = 1;
        for (const auto& ideal : ideals) lcm = std::lcm(lcm, ideal.rs.cartan_det);
        height_weight.assign(rank, 0);
        for (const auto& ideal : ideals) {
            Int scale = lcm / ideal.rs.cartan_det;
            for (int j = 0; j < ideal.rs.rank; ++j) {
                Int colsum = 0;
                for (int i = 0; i < ideal.rs.rank; ++i) colsum += ideal.rs.cartan_inv_num[i][j];
                height_weight[ideal.coord_pos[j]] = scale * colsum;
            }
        }
    }

    Int height(const IVec& w) const {
        Int h = 0;
        for (int j = 0; j < rank; ++j) h += height_weight[j] * w[j];
        return h;
    }

    bool dominant(const IVec& w) const {
        return std::all_of(w.begin(), w.end(), [](Int x) { return x >= 0; });
    }

    BigInt dim(const IVec& k_hw) const {
        BigInt d = 1;
        for (const auto& ideal : ideals) {
            IVec hw(ideal.rs.rank);
            for (int j = 0; j < ideal.rs.rank; ++j) hw[j] = k_hw[ideal.coord_pos[j]];
            d *= ideal.rs.weyl_dimension(hw);
        }
        return d;
    }

    Character irrep_character(const IVec& k_hw) const {
        std::vector<std::pair<IVec, Int>> acc = {{IVec(rank, 0), 1}};
        for (const auto& ideal : ideals) {
            IVec hw(ideal.rs.rank);
            for (int j = 0; j < ideal.rs.rank; ++j) hw[j] = k_hw[ideal.coord_pos[j]];
            Character sub = freudenthal(ideal.rs, hw, std::numeric_limits<Int>::max());
            std::vector<std::pair<IVec, Int>> next;
            next.reserve(acc.size() * sub.entries.size());
            for (const auto& [skey, smult] : sub.entries) {
                IVec sw = key_to_vec(skey, ideal.rs.rank);
                for (const auto& [base, bmult] : acc) {
                    IVec w = base;
                    for (int j = 0; j < ideal.rs.rank; ++j) w[ideal.coord_pos[j]] = sw[j];
                    next.emplace_back(std::move(w), bmult * smult);
                }
            }
            acc = std::move(next);
        }
        Character out;
        out.rank = rank;
        out.entries.reserve(acc.size());
        for (auto& [w, m] : acc) out.add(w, m);
        return out;
    }
};

// Shared greedy peel over an abstract context (exceptional k or classical
// epsilon blocks). No new dominant highest weights can appear while
// subtracting, so one pass over the initial dominant support in decreasing
// height order is exhaustive.
template <typename Ctx>
KDecomposition peel_generic(const Ctx& ctx, const Character& ch, int tie_break) {
    std::vector<std::pair<IVec, Int>> cands;
    for (const auto& [key, mult] : ch.entries) {
        IVec w = key_to_vec(key, ch.rank);
        if (ctx.dominant(w)) cands.emplace_back(std::move(w), ctx.height(w));
    }
    std::sort(cands.begin(), cands.end(), [&](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return tie_break == 0 ? a.first > b.first : a.first < b.first;
    });

    Character remaining = ch;
    KDecomposition dec;
    dec.rank = ch.rank;
    for (const auto& [w, h] : cands) {
        (void)h;
        Int cur = remaining.mult(w);
        if (cur < 0)
            throw std::logic_error("peel: negative remainder (inconsistent restriction data)");
        if (cur == 0) continue;
        Character irrep = ctx.irrep_character(w);
        for (const auto& [ikey, imult] : irrep.entries) {
            auto it = remaining.entries.find(ikey);
            Int have = it == remaining.entries.end() ? 0 : it->second;
            Int left = have - cur * imult;
            if (left < 0)
                throw std::logic_error("peel: negative remainder (inconsistent restriction data)");
            if (left == 0) {
                if (it != remaining.entries.end()) remaining.entries.erase(it);
            } else {
                remaining.entries[ikey] = left;
            }
        }
        dec.entries.emplace_back(w, cur);
    }
    if (!remaining.entries.empty())
        throw std::logic_error("peel: nonzero remainder (inconsistent restriction data)");
    std::sort(dec.entries.begin(), dec.entries.end());
    return dec;
}

}  // namespace

Character restrict_to_k(const QuaternionicPair& p, const Character& ch) {
    const RootSystem& g = p.g;
    RootSystem::CorootForm beta_form = g.coroot_form(g.highest_root);
    std::vector<int> mc_nodes;
    for (size_t i = 1; i < p.k_ideals.size(); ++i)
        for (int n : p.k_ideals[i].nodes) mc_nodes.push_back(n);

    Character out;
    out.rank = g.rank;
    out.entries.reserve(ch.entries.size());
    for (const auto& [key, mult] : ch.entries) {
        IVec nu = key_to_vec(key, g.rank);
        IVec kc(g.rank);
        kc[0] = beta_form.apply(nu);
        for (size_t j = 0; j < mc_nodes.size(); ++j) kc[1 + j] = nu[mc_nodes[j]];
        out.add(kc, mult);  // equal rank: the coordinate map is injective
    }
    if (out.entries.size() != ch.entries.size())
        throw std::logic_error("restrict_to_k: coordinate map not injective");
    return out;
}

KDecomposition peel(const QuaternionicPair& p, const Character& k_character, int tie_break) {
    return peel_generic(KContext(p), k_character, tie_break);
}

BigInt k_irrep_dimension(const QuaternionicPair& p, const IVec& k_hw) {
    return KContext(p).dim(k_hw);
}

KDecomposition oracle_decomposition(const QuaternionicPair& p, const IVec& lambda, Int dim_cap,
                                    int tie_break) {
    Character ch = cached_freudenthal(p.g, lambda, dim_cap);
    BigInt mass = ch.total_mass();
    if (mass != p.g.weyl_dimension(lambda))
        throw std::logic_error("oracle: character mass does not match the Weyl dimension");
    Character kch = restrict_to_k(p, ch);
    KDecomposition dec = peel_generic(KContext(p), kch, tie_break);
    KContext ctx(p);
    BigInt peeled = 0;
    for (const auto& [w, m] : dec.entries) peeled += m * ctx.dim(w);
    if (peeled != mass) throw std::logic_error("oracle: peeled mass mismatch");
    return dec;
}

Int oracle_multiplicity(const QuaternionicPair& p, const KDecomposition& dec, Int m,
                        G2Side side) {
    IVec probe(dec.rank, 0);
    if (side == G2Side::alpha2) {
        if (p.family != PairFamily::g2)
            throw std::invalid_argument("alpha2 side exists only for g2");
        probe[1] = m;
    } else {
        probe[0] = m;
    }
    return dec.coefficient(probe);
}

Int oracle_multiplicity(const QuaternionicPair& p, const IVec& lambda, Int m, G2Side side,
                        Int dim_cap) {
    return oracle_multiplicity(p, oracle_decomposition(p, lambda, dim_cap), m, side);
}

Int oracle_twistor(const QuaternionicPair& p, const KDecomposition& dec, G2Side side) {
    // l-fixed vectors: the zero weight line of the Gamma_{2d} carried by the
    // target sl2, with everything else acting trivially.
    int target = (p.family == PairFamily::g2 && side == G2Side::alpha2) ? 1 : 0;
    Int total = 0;
    for (const auto& [w, m] : dec.entries) {
        bool rest_trivial = true;
        for (int j = 0; j < dec.rank; ++j)
            if (j != target && w[j] != 0) rest_trivial = false;
        if (rest_trivial && w[target] % 2 == 0) total += m;
    }
    return total;
}

Int oracle_twistor(const QuaternionicPair& p, const IVec& lambda, G2Side side, Int dim_cap) {
    return oracle_twistor(p, oracle_decomposition(p, lambda, dim_cap), side);
}

// --- classical -----------------------------------------------------------------

namespace {

struct EpsFactor {
    char kind;  // 'U','B','C','D'
    int offset;
    int len;
};

IVec eps_to_fund(char kind, const IVec& x) {
    int r = (int)x.size();
    IVec a;
    switch (kind) {
        case 'U':
            for (int i = 0; i + 1 < r; ++i) a.push_back(x[i] - x[i + 1]);
            return a;
        case 'B':
            for (int i = 0; i + 1 < r; ++i) a.push_back(x[i] - x[i + 1]);
            a.push_back(2 * x[r - 1]);
            return a;
        case 'C':
            for (int i = 0; i + 1 < r; ++i) a.push_back(x[i] - x[i + 1]);
            a.push_back(x[r - 1]);
            return a;
        case 'D':
            for (int i = 0; i + 2 < r; ++i) a.push_back(x[i] - x[i + 1]);
            a.push_back(x[r - 2] - x[r - 1]);
            a.push_back(x[r - 2] + x[r - 1]);
            return a;
    }
    throw std::logic_error("bad factor kind");
}

IVec simple_root_eps(char kind, int r, int i) {
    IVec e(r, 0);
    switch (kind) {
        case 'U':
            e[i] = 1;
            e[i + 1] = -1;
            return e;
        case 'B':
            if (i + 1 < r) {
                e[i] = 1;
                e[i + 1] = -1;
            } else {
                e[r - 1] = 1;
            }
            return e;
        case 'C':
            if (i + 1 < r) {
                e[i] = 1;
                e[i + 1] = -1;
            } else {
                e[r - 1] = 2;
            }
            return e;
        case 'D':
            if (i + 2 < r) {
                e[i] = 1;
                e[i + 1] = -1;
            } else if (i + 2 == r) {
                e[r - 2] = 1;
                e[r - 1] = -1;
            } else {
                e[r - 2] = 1;
                e[r - 1] = 1;
            }
            return e;
    }
    throw std::logic_error("bad factor kind");
}

RootSystem factor_root_system(char kind, int r) {
    switch (kind) {
        case 'U': return build_root_system(SimpleType::A, r - 1);  // r >= 2
        case 'B': return build_root_system(SimpleType::B, r);
        case 'C': return build_root_system(SimpleType::C, r);
        case 'D': return build_root_system(SimpleType::D, r);
    }
    throw std::logic_error("bad factor kind");
}

bool factor_dominant(char kind, const Int* x, int r) {
    for (int i = 0; i + 1 < r; ++i)
        if (x[i] < x[i + 1]) return false;
    switch (kind) {
        case 'U': return true;
        case 'B':
        case 'C': return x[r - 1] >= 0;
        case 'D': return r < 2 || x[r - 2] >= std::abs(x[r - 1]);
    }
    return false;
}

// Character of one classical factor in its epsilon coordinates.
std::vector<std::pair<IVec, Int>> factor_char_eps(char kind, const IVec& hw) {
    int r = (int)hw.size();
    if (kind == 'U' && r == 1) return {{hw, 1}};
    RootSystem rs = factor_root_system(kind, r);
    IVec fund = eps_to_fund(kind, hw);
    Character ch = freudenthal(rs, fund, std::numeric_limits<Int>::max());
    std::vector<IVec> alpha_eps;
    for (int i = 0; i < rs.rank; ++i) alpha_eps.push_back(simple_root_eps(kind, r, i));
    std::vector<std::pair<IVec, Int>> out;
    out.reserve(ch.entries.size());
    for (const auto& [key, mult] : ch.entries) {
        IVec nu = key_to_vec(key, rs.rank);
        IVec diff(rs.rank);
        for (int i = 0; i < rs.rank; ++i) diff[i] = fund[i] - nu[i];
        auto c = rs.fund_to_root(diff);
        if (!c) throw std::logic_error("factor weight outside the root lattice");
        IVec eps = hw;
        for (int i = 0; i < rs.rank; ++i)
            for (int j = 0; j < r; ++j) eps[j] -= (*c)[i] * alpha_eps[i][j];
        out.emplace_back(std::move(eps), mult);
    }
    return out;
}

BigInt factor_dim(char kind, const IVec& hw) {
    int r = (int)hw.size();
    if (kind == 'U' && r == 1) return 1;
    RootSystem rs = factor_root_system(kind, r);
    return rs.weyl_dimension(eps_to_fund(kind, hw));
}

struct ClassicalCtx {
    std::vector<EpsFactor> factors;
    int rank;  // total epsilon length

    bool dominant(const IVec& w) const {
        for (const auto& f : factors)
            if (!factor_dominant(f.kind, w.data() + f.offset, f.len)) return false;
        return true;
    }
    Int height(const IVec& w) const {
        Int h = 0;
        for (int j = 0; j < rank; ++j) h += (Int)(rank - j) * w[j];
        return h;
    }
    BigInt dim(const IVec& w) const {
        BigInt d = 1;
        for (const auto& f : factors) {
            IVec hw(w.begin() + f.offset, w.begin() + f.offset + f.len);
            d *= factor_dim(f.kind, hw);
        }
        return d;
    }
    Character irrep_character(const IVec& k_hw) const {
        std::vector<std::pair<IVec, Int>> acc = {{IVec(rank, 0), 1}};
        for (const auto& f : factors) {
            IVec hw(k_hw.begin() + f.offset, k_hw.begin() + f.offset + f.len);
            auto sub = factor_char_eps(f.kind, hw);
            std::vector<std::pair<IVec, Int>> next;
            next.reserve(acc.size() * sub.size());
            for (const auto& [sw, smult] : sub)
                for (const auto& [base, bmult] : acc) {
                    IVec w = base;
                    for (int j = 0; j < f.len; ++j) w[f.offset + j] = sw[j];
                    next.emplace_back(std::move(w), bmult * smult);
                }
            acc = std::move(next);
        }
        Character out;
        out.rank = rank;
        for (auto& [w, m] : acc) out.add(w, m);
        return out;
    }
};

ClassicalCtx classical_context(PairFamily family, int n) {
    ClassicalCtx ctx;
    switch (family) {
        case PairFamily::u:
            ctx.rank = n + 2;
            ctx.factors = {{'U', 0, 2}, {'U', 2, n}};
            return ctx;
        case PairFamily::so:
            ctx.rank = (n % 2 == 0) ? (n + 4) / 2 : (n + 3) / 2;
            ctx.factors = {{'D', 0, 2},
                           {n % 2 == 0 ? 'D' : 'B', 2, ctx.rank - 2}};
            return ctx;
        case PairFamily::sp:
            ctx.rank = n + 1;
            ctx.factors = {{'C', 0, 1}, {'C', 1, n}};
            return ctx;
        default:
            throw std::invalid_argument("classical_context: not a classical family");
    }
}

char ambient_kind(PairFamily family, int n) {
    switch (family) {
        case PairFamily::u: return 'U';
        case PairFamily::so: return n % 2 == 0 ? 'D' : 'B';
        case PairFamily::sp: return 'C';
        default: throw std::invalid_argument("not classical");
    }
}

}  // namespace

KDecomposition classical_decomposition(PairFamily family, int n, const IVec& lambda, Int dim_cap,
                                       int tie_break) {
    validate_classical_weight(family, n, lambda);
    QuaternionicPair p = pair(family, n);
    const RootSystem& rs = p.g;
    char kind = ambient_kind(family, n);
    IVec fund = eps_to_fund(kind, lambda);
    Character ch = cached_freudenthal(rs, fund, dim_cap);
    BigInt mass = ch.total_mass();

    std::vector<IVec> alpha_eps;
    for (int i = 0; i < rs.rank; ++i)
        alpha_eps.push_back(simple_root_eps(kind, (int)lambda.size(), i));

    Character eps_ch;
    eps_ch.rank = (int)lambda.size();
    eps_ch.entries.reserve(ch.entries.size());
    for (const auto& [key, mult] : ch.entries) {
        IVec nu = key_to_vec(key, rs.rank);
        IVec diff(rs.rank);
        for (int i = 0; i < rs.rank; ++i) diff[i] = fund[i] - nu[i];
        auto c = rs.fund_to_root(diff);
        if (!c) throw std::logic_error("classical weight outside the root lattice");
        IVec eps = lambda;
        for (int i = 0; i < rs.rank; ++i) {
            if ((*c)[i] == 0) continue;
            for (size_t j = 0; j < lambda.size(); ++j) eps[j] -= (*c)[i] * alpha_eps[i][j];
        }
        eps_ch.add(eps, mult);
    }
    if (eps_ch.entries.size() != ch.entries.size())
        throw std::logic_error("epsilon coordinate map not injective");

    ClassicalCtx ctx = classical_context(family, n);
    KDecomposition dec = peel_generic(ctx, eps_ch, tie_break);
    BigInt peeled = 0;
    for (const auto& [w, m] : dec.entries) peeled += m * ctx.dim(w);
    if (peeled != mass) throw std::logic_error("classical oracle: peeled mass mismatch");
    return dec;
}

std::vector<std::pair<IVec, Int>> classical_fixed_space(PairFamily family, int n,
                                                        const IVec& lambda, Int dim_cap) {
    KDecomposition dec = classical_decomposition(family, n, lambda, dim_cap);
    ClassicalCtx ctx = classical_context(family, n);
    const EpsFactor& first = ctx.factors[0];
    std::vector<std::pair<IVec, Int>> out;
    for (const auto& [w, m] : dec.entries) {
        bool second_trivial = true;
        for (int j = first.len; j < ctx.rank; ++j)
            if (w[j] != 0) second_trivial = false;
        if (!second_trivial) continue;
        out.emplace_back(IVec(w.begin(), w.begin() + first.len), m);
    }
    return out;
}

Int classical_oracle_mult(PairFamily family, int n, const IVec& lambda, Int m, Int dim_cap) {
    auto fixed = classical_fixed_space(family, n, lambda, dim_cap);
    Int total = 0;
    switch (family) {
        case PairFamily::u:
            for (const auto& [w, mult] : fixed)
                if (w[0] - w[1] == m && w[0] + w[1] == 0) total += mult;
            return total;
        case PairFamily::so:
            // 1 x S^m of SO(4) = epsilon weight (m/2, -m/2)
            if (m % 2 != 0) return 0;
            for (const auto& [w, mult] : fixed)
                if (w[0] == m / 2 && w[1] == -m / 2) total += mult;
            return total;
        case PairFamily::sp:
            for (const auto& [w, mult] : fixed)
                if (w[0] == m) total += mult;
            return total;
        default:
            throw std::invalid_argument("not a classical family");
    }
}

namespace {

// sl2 x sl2 labels (mu, nu): dominance, heights and string characters.
struct So4LabelCtx {
    int rank = 2;
    bool dominant(const IVec& w) const { return w[0] >= 0 && w[1] >= 0; }
    Int height(const IVec& w) const { return w[0] + w[1]; }
    BigInt dim(const IVec& w) const { return BigInt(w[0] + 1) * (w[1] + 1); }
    Character irrep_character(const IVec& w) const {
        Character out;
        out.rank = 2;
        for (Int a = -w[0]; a <= w[0]; a += 2)
            for (Int b = -w[1]; b <= w[1]; b += 2) out.add({a, b}, 1);
        return out;
    }
};

}  // namespace

std::vector<std::pair<IVec, Int>> u4_to_so4_decomposition(const IVec& lambda4, Int dim_cap) {
    if (lambda4.size() != 4) throw std::invalid_argument("u4_to_so4 expects 4 coordinates");
    RootSystem a3 = build_root_system(SimpleType::A, 3);
    IVec fund = eps_to_fund('U', lambda4);
    if (!a3.is_dominant(fund))
        throw std::invalid_argument("lambda must be weakly decreasing");
    Character ch = cached_freudenthal(a3, fund, dim_cap);
    BigInt mass = ch.total_mass();

    std::vector<IVec> alpha_eps;
    for (int i = 0; i < 3; ++i) alpha_eps.push_back(simple_root_eps('U', 4, i));

    // SO(4) torus inside the diagonal torus through hyperbolic coordinate
    // pairs (1,2) and (3,4): weight (x1..x4) restricts to the labels
    // (p + q, p - q) with p = x1 - x2, q = x3 - x4.
    Character labels;
    labels.rank = 2;
    for (const auto& [key, mult] : ch.entries) {
        IVec nu = key_to_vec(key, 3);
        IVec diff = {fund[0] - nu[0], fund[1] - nu[1], fund[2] - nu[2]};
        auto c = a3.fund_to_root(diff);
        if (!c) throw std::logic_error("gl4 weight outside the root lattice");
        IVec eps = lambda4;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 4; ++j) eps[j] -= (*c)[i] * alpha_eps[i][j];
        Int p = eps[0] - eps[1], q = eps[2] - eps[3];
        labels.add({p + q, p - q}, mult);
    }

    So4LabelCtx ctx;
    KDecomposition dec = peel_generic(ctx, labels, 0);
    BigInt peeled = 0;
    for (const auto& [w, mm] : dec.entries) peeled += mm * ctx.dim(w);
    if (peeled != mass) throw std::logic_error("u4_to_so4_oracle: peeled mass mismatch");
    return dec.entries;
}

Int u4_to_so4_oracle(const IVec& lambda4, Int m, Int dim_cap) {
    auto dec = u4_to_so4_decomposition(lambda4, dim_cap);
    Int left = 0, right = 0;
    for (const auto& [w, mult] : dec) {
        if (w[0] == m && w[1] == 0) left += mult;
        if (w[0] == 0 && w[1] == m) right += mult;
    }
    if (left != right)
        throw std::logic_error("u4_to_so4_oracle: S^m x 1 and 1 x S^m multiplicities differ");
    return right;
}

Int classical_oracle_twistor(PairFamily family, int n, const IVec& lambda, Int dim_cap) {
    auto fixed = classical_fixed_space(family, n, lambda, dim_cap);
    Int total = 0;
    switch (family) {
        case PairFamily::u:
            for (const auto& [w, mult] : fixed)
                if (mod2(w[0] - w[1]) == 0) total += mult;
            return total;
        case PairFamily::so:
            for (const auto& [w, mult] : fixed)
                if (w[0] == w[1]) total += mult;  // Gamma_{2x} x Gamma_0
            return total;
        case PairFamily::sp:
            for (const auto& [w, mult] : fixed)
                if (mod2(w[0]) == 0) total += mult;
            return total;
        default:
            throw std::invalid_argument("not a classical family");
    }
}

}  // namespace qbranch
