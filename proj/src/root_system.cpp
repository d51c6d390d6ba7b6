#include "qbranch/root_system.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace qbranch {

SimpleType simple_type_from_char(char c) {
    switch (c) {
        case 'A': return SimpleType::A;
        case 'B': return SimpleType::B;
        case 'C': return SimpleType::C;
        case 'D': return SimpleType::D;
        case 'E': return SimpleType::E;
        case 'F': return SimpleType::F;
        case 'G': return SimpleType::G;
    }
    throw std::invalid_argument(std::string("unknown simple type '") + c + "'");
}

namespace {

void set_entry(std::vector<IVec>& a, int i, int j, Int vij, Int vji) {
    a[i][j] = vij;
    a[j][i] = vji;
}

// Cartan matrix and symmetrizer per type, Bourbaki numbering except G2
// (node 1 long, see header).
void cartan_data(SimpleType t, int r, std::vector<IVec>& a, IVec& d) {
    a.assign(r, IVec(r, 0));
    for (int i = 0; i < r; ++i) a[i][i] = 2;
    d.assign(r, 1);
    auto chain = [&](int from, int to) {  // simply laced edges i - i+1
        for (int i = from; i < to; ++i) set_entry(a, i, i + 1, -1, -1);
    };
    switch (t) {
        case SimpleType::A:
            if (r < 1) throw std::invalid_argument("A_n requires n >= 1");
            chain(0, r - 1);
            break;
        case SimpleType::B:
            if (r < 1) throw std::invalid_argument("B_n requires n >= 1");
            chain(0, r - 2);
            if (r >= 2) set_entry(a, r - 2, r - 1, -1, -2);
            for (int i = 0; i < r - 1; ++i) d[i] = 2;
            d[r - 1] = 1;
            break;
        case SimpleType::C:
            if (r < 1) throw std::invalid_argument("C_n requires n >= 1");
            chain(0, r - 2);
            if (r >= 2) set_entry(a, r - 2, r - 1, -2, -1);
            for (int i = 0; i < r - 1; ++i) d[i] = 1;
            d[r - 1] = 2;
            break;
        case SimpleType::D:
            if (r < 2) throw std::invalid_argument("D_n requires n >= 2");
            if (r == 2) break;  // A1 x A1, disconnected
            chain(0, r - 2);
            set_entry(a, r - 3, r - 1, -1, -1);
            break;
        case SimpleType::E: {
            if (r < 6 || r > 8) throw std::invalid_argument("E_n requires n in {6,7,8}");
            // Bourbaki: chain 1-3-4-5-...-r, node 2 attached to node 4.
            std::vector<int> ch = {0, 2, 3, 4, 5, 6, 7};
            for (int i = 0; i + 1 < r - 1; ++i) set_entry(a, ch[i], ch[i + 1], -1, -1);
            set_entry(a, 1, 3, -1, -1);
            break;
        }
        case SimpleType::F:
            if (r != 4) throw std::invalid_argument("F requires rank 4");
            set_entry(a, 0, 1, -1, -1);
            set_entry(a, 1, 2, -1, -2);
            set_entry(a, 2, 3, -1, -1);
            d = {2, 2, 1, 1};
            break;
        case SimpleType::G:
            if (r != 2) throw std::invalid_argument("G requires rank 2");
            // node 1 long: <a2, a1^vee> = -1, <a1, a2^vee> = -3
            set_entry(a, 0, 1, -1, -3);
            d = {3, 1};
            break;
    }
}

// Exact inverse of the Cartan matrix over Frac; returns (num matrix, det scale)
// with A^{-1} = num/den entrywise.
void invert_cartan(const std::vector<IVec>& a, std::vector<IVec>& inv_num, Int& den) {
    int n = (int)a.size();
    std::vector<std::vector<Frac>> m(n, std::vector<Frac>(2 * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = Frac(a[i][j]);
        m[i][n + i] = Frac(1);
    }
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (m[i][c].num != 0) { p = i; break; }
        if (p < 0) throw std::logic_error("singular Cartan matrix");
        std::swap(m[c], m[p]);
        Frac piv = m[c][c];
        for (int j = 0; j < 2 * n; ++j) m[c][j] = m[c][j] / piv;
        for (int i = 0; i < n; ++i) {
            if (i == c || m[i][c].num == 0) continue;
            Frac f = m[i][c];
            for (int j = 0; j < 2 * n; ++j) m[i][j] = m[i][j] - f * m[c][j];
        }
    }
    den = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) den = std::lcm(den, m[i][n + j].den);
    inv_num.assign(n, IVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            inv_num[i][j] = m[i][n + j].num * (den / m[i][n + j].den);
}

}  // namespace

Int RootSystem::pairing_with_simple_coroot(const IVec& w, int i) const {
    (void)w;
    return w[i];
}

Int RootSystem::form_roots(const IVec& a, const IVec& b) const {
    // (a,b) = a^T (D*cartan) b
    Int s = 0;
    for (int i = 0; i < rank; ++i) {
        if (a[i] == 0) continue;
        Int row = 0;
        for (int j = 0; j < rank; ++j) row += cartan[i][j] * b[j];
        s += a[i] * sym[i] * row;
    }
    return s;
}

Frac RootSystem::pairing(const IVec& weight, const IVec& root_coords) const {
    if (!is_root(root_coords)) throw std::invalid_argument("pairing: vector is not a root");
    Int halfnorm = form_roots(root_coords, root_coords) / 2;
    Int num = 0;
    for (int j = 0; j < rank; ++j) num += root_coords[j] * sym[j] * weight[j];
    return Frac(num, halfnorm);
}

RootSystem::CorootForm RootSystem::coroot_form(const IVec& root_coords) const {
    if (!is_root(root_coords)) throw std::invalid_argument("coroot_form: vector is not a root");
    CorootForm f;
    f.halfnorm = form_roots(root_coords, root_coords) / 2;
    f.weights.resize(rank);
    for (int j = 0; j < rank; ++j) f.weights[j] = root_coords[j] * sym[j];
    return f;
}

bool RootSystem::is_root(const IVec& coords) const {
    IVec neg(rank);
    for (int i = 0; i < rank; ++i) neg[i] = -coords[i];
    for (const auto& r : positive_roots)
        if (r == coords || r == neg) return true;
    return false;
}

bool RootSystem::is_dominant(const IVec& w) const {
    for (Int x : w)
        if (x < 0) return false;
    return true;
}

IVec RootSystem::root_to_fund(const IVec& c) const {
    IVec w(rank, 0);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) w[i] += cartan[i][j] * c[j];
    return w;
}

std::optional<IVec> RootSystem::fund_to_root(const IVec& w) const {
    IVec c(rank, 0);
    for (int i = 0; i < rank; ++i) {
        Int s = 0;
        for (int j = 0; j < rank; ++j) s += cartan_inv_num[i][j] * w[j];
        if (s % cartan_det != 0) return std::nullopt;
        c[i] = s / cartan_det;
    }
    return c;
}

IVec RootSystem::simple_reflection(int i, const IVec& w) const {
    IVec r = w;
    Int wi = w[i];
    if (wi == 0) return r;
    for (int k = 0; k < rank; ++k) r[k] -= wi * cartan[k][i];
    return r;
}

IVec RootSystem::dominant_representative(IVec w) const {
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 0; i < rank; ++i) {
            if (w[i] < 0) {
                Int wi = w[i];
                for (int k = 0; k < rank; ++k) w[k] -= wi * cartan[k][i];
                moved = true;
            }
        }
    }
    return w;
}

RootSystem::DotResult RootSystem::dominant_conjugate(const IVec& w) const {
    IVec v(rank);
    for (int i = 0; i < rank; ++i) v[i] = w[i] + 1;
    int sign = 1;
    bool regular = true;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 0; i < rank; ++i) {
            if (v[i] == 0) regular = false;
            if (v[i] < 0) {
                Int vi = v[i];
                for (int k = 0; k < rank; ++k) v[k] -= vi * cartan[k][i];
                sign = -sign;
                moved = true;
            }
        }
    }
    for (int i = 0; i < rank; ++i) {
        if (v[i] == 0) regular = false;
        v[i] -= 1;
    }
    return {v, sign, regular};
}

BigInt RootSystem::weyl_dimension(const IVec& lambda) const {
    if ((int)lambda.size() != rank) throw std::invalid_argument("weyl_dimension: wrong arity");
    if (!is_dominant(lambda)) throw std::invalid_argument("weyl_dimension: non-dominant weight");
    BigInt num = 1, den = 1;
    for (size_t k = 0; k < positive_roots.size(); ++k) {
        const IVec& c = positive_roots[k];
        Int top = 0, bot = 0;
        for (int j = 0; j < rank; ++j) {
            top += c[j] * sym[j] * (lambda[j] + 1);
            bot += c[j] * sym[j];
        }
        num *= top;
        den *= bot;
    }
    BigInt q, r;
    divide_qr(num, den, q, r);
    if (r != 0) throw std::logic_error("weyl_dimension: non-integral product");
    return q;
}

std::string RootSystem::label() const {
    std::ostringstream os;
    os << (char)type << rank;
    return os.str();
}

RootSystem build_root_system_from_cartan(const std::vector<IVec>& cartan, const IVec& sym,
                                         SimpleType label, int rank) {
    RootSystem rs;
    rs.type = label;
    rs.rank = rank;
    rs.cartan = cartan;
    rs.sym = sym;
    for (int i = 0; i < rank; ++i) {
        if (cartan[i][i] != 2) throw std::invalid_argument("Cartan diagonal must be 2");
        for (int j = 0; j < rank; ++j) {
            if (i != j && cartan[i][j] > 0)
                throw std::invalid_argument("Cartan off-diagonal must be <= 0");
            if (sym[i] * cartan[i][j] != sym[j] * cartan[j][i])
                throw std::invalid_argument("symmetrizer does not symmetrize Cartan matrix");
        }
    }
    invert_cartan(cartan, rs.cartan_inv_num, rs.cartan_det);

    // Positive roots by closure: a + a_i is a root iff the a_i-string
    // through a extends upward, i.e. (down-steps) - <a, a_i^vee> > 0.
    std::set<IVec> known;
    std::vector<IVec> level;
    for (int i = 0; i < rank; ++i) {
        IVec e(rank, 0);
        e[i] = 1;
        known.insert(e);
        level.push_back(e);
    }
    rs.positive_roots = level;
    while (!level.empty()) {
        std::vector<IVec> next;
        for (const auto& a : level) {
            for (int i = 0; i < rank; ++i) {
                Int pair_i = 0;
                for (int j = 0; j < rank; ++j) pair_i += cartan[i][j] * a[j];
                Int down = 0;
                IVec b = a;
                while (true) {
                    b[i] -= 1;
                    bool zero = std::all_of(b.begin(), b.end(), [](Int x) { return x == 0; });
                    if (zero || !known.count(b)) break;
                    ++down;
                }
                if (down - pair_i > 0) {
                    IVec up = a;
                    up[i] += 1;
                    if (known.insert(up).second) next.push_back(up);
                }
            }
        }
        for (auto& r : next) rs.positive_roots.push_back(r);
        level = std::move(next);
    }
    std::stable_sort(rs.positive_roots.begin(), rs.positive_roots.end(),
                     [](const IVec& a, const IVec& b) {
                         Int ha = 0, hb = 0;
                         for (Int x : a) ha += x;
                         for (Int x : b) hb += x;
                         if (ha != hb) return ha < hb;
                         return a < b;
                     });

    // Highest root: the unique positive root dominating all others.
    const IVec* best = nullptr;
    for (const auto& r : rs.positive_roots) {
        bool dominates_all = true;
        for (const auto& s : rs.positive_roots) {
            for (int j = 0; j < rank; ++j)
                if (r[j] < s[j]) { dominates_all = false; break; }
            if (!dominates_all) break;
        }
        if (dominates_all) { best = &r; break; }
    }
    if (!best) throw std::logic_error("no highest root (reducible system?)");
    rs.highest_root = *best;

    rs.pos_root_fund.reserve(rs.positive_roots.size());
    rs.pos_root_halfnorm.reserve(rs.positive_roots.size());
    for (const auto& c : rs.positive_roots) {
        rs.pos_root_fund.push_back(rs.root_to_fund(c));
        Int n2 = rs.form_roots(c, c);
        if (n2 % 2 != 0) throw std::logic_error("odd root norm");
        rs.pos_root_halfnorm.push_back(n2 / 2);
    }
    return rs;
}

RootSystem build_root_system(SimpleType type, int rank) {
    std::vector<IVec> a;
    IVec d;
    cartan_data(type, rank, a, d);
    if (type == SimpleType::D && rank == 2) {
        // A1 x A1; highest-root search below would fail, special-case it.
        RootSystem rs;
        rs.type = type;
        rs.rank = 2;
        rs.cartan = a;
        rs.sym = d;
        invert_cartan(a, rs.cartan_inv_num, rs.cartan_det);
        rs.positive_roots = {{1, 0}, {0, 1}};
        rs.highest_root = {0, 1};  // of the second ideal; unused for D2
        for (const auto& c : rs.positive_roots) {
            rs.pos_root_fund.push_back(rs.root_to_fund(c));
            rs.pos_root_halfnorm.push_back(rs.form_roots(c, c) / 2);
        }
        return rs;
    }
    return build_root_system_from_cartan(a, d, type, rank);
}

}  // namespace qbranch
