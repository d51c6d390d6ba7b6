#include "qbranch/io.hpp"

#include <json.hpp>
#include <sstream>

#include "qbranch/report.hpp"

namespace qbranch {

using nlohmann::json;

namespace {

json lambda_json(const IVec& v) {
    json a = json::array();
    for (Int x : v) a.push_back(x);
    return a;
}

std::string lambda_str(const IVec& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

json result_json(const QueryResult& r) {
    json j;
    j["schema"] = kSchemaVersion;
    j["command"] = r.command;
    j["pair"] = r.pair;
    if (r.n > 0) j["n"] = r.n;
    j["lambda"] = lambda_json(r.lambda);
    if (r.m >= 0) j["m"] = r.m;
    if (!r.variant.empty()) j["variant"] = r.variant;
    j["engine"] = r.provenance;
    if (r.command == "series") {
        json s = json::array();
        for (auto [d, v] : r.series) s.push_back({{"d", d}, {"mult", v}});
        j["series"] = s;
    } else {
        j["value"] = r.value;
    }
    if (!r.engine_values.empty()) {
        json ev = json::object();
        for (const auto& [name, v] : r.engine_values) ev[name] = v;
        j["engines"] = ev;
        j["match"] = r.engines_agree;
    }
    if (!r.conditions.empty()) {
        json cs = json::array();
        for (const auto& c : r.conditions)
            cs.push_back({{"name", c.name}, {"satisfied", c.satisfied}});
        j["conditions"] = cs;
    }
    return j;
}

}  // namespace

std::string format_json(const QueryResult& r) { return result_json(r).dump(2) + "\n"; }

std::string format_plain(const QueryResult& r) {
    std::ostringstream os;
    if (r.command == "series") {
        for (auto [d, v] : r.series) os << "d=" << d << " mult=" << v << "\n";
        if (r.series.empty()) os << "(empty)\n";
        return os.str();
    }
    if (!r.engine_values.empty()) {
        for (const auto& [name, v] : r.engine_values) os << name << "=" << v << " ";
        os << (r.engines_agree ? "match" : "MISMATCH") << "\n";
    } else {
        os << r.value << "\n";
    }
    for (const auto& c : r.conditions)
        if (!c.satisfied) os << "condition failed: " << c.name << "\n";
    return os.str();
}

std::string format_csv(const QueryResult& r) {
    std::ostringstream os;
    os << "lambda,d,mult\n";
    if (r.command == "series") {
        for (auto [d, v] : r.series)
            os << "\"" << lambda_str(r.lambda) << "\"," << d << "," << v << "\n";
    } else {
        os << "\"" << lambda_str(r.lambda) << "\"," << (r.m >= 0 ? r.m / 2 : 0) << ","
           << r.value << "\n";
    }
    return os.str();
}

std::string format_table(const std::vector<TableRow>& rows, const std::string& fmt,
                         const std::string& pair, const std::string& variant) {
    std::ostringstream os;
    if (fmt == "csv") {
        os << "lambda,d,mult\n";
        for (const auto& r : rows)
            os << "\"" << lambda_str(r.lambda) << "\"," << r.d << "," << r.mult << "\n";
    } else if (fmt == "json") {
        json j;
        j["schema"] = kSchemaVersion;
        j["pair"] = pair;
        if (!variant.empty()) j["variant"] = variant;
        json a = json::array();
        for (const auto& r : rows)
            a.push_back({{"lambda", lambda_json(r.lambda)}, {"d", r.d}, {"mult", r.mult}});
        j["rows"] = a;
        os << j.dump(2) << "\n";
    } else if (fmt == "markdown") {
        os << "| lambda | d | mult |\n|---|---|---|\n";
        for (const auto& r : rows)
            os << "| " << lambda_str(r.lambda) << " | " << r.d << " | " << r.mult << " |\n";
    } else {
        throw std::invalid_argument("unknown table format '" + fmt + "'");
    }
    return os.str();
}

std::string catalog_export_json() {
    json out;
    out["schema"] = kSchemaVersion;
    out["conventions"] = {
        {"node_numbering",
         "Bourbaki for A-F; g2 nodes are (1: long, 2: short), the transpose of Bourbaki"},
        {"k_positive_system",
         "the positive system of k contains beta and the unpainted-node positives; "
         "k-type labels pair against beta^v first, then the m_c simple coroots in "
         "the recorded ideal order"},
        {"weights", "fundamental-weight coordinates for exceptional pairs, "
                    "partition-style coordinates for classical families"},
    };
    json pairs = json::array();
    for (auto f : {PairFamily::e6, PairFamily::e7, PairFamily::e8, PairFamily::f4,
                   PairFamily::g2}) {
        const QuaternionicPair& p = pair(f);
        json jp;
        jp["family"] = pair_family_name(f);
        jp["rank"] = p.g.rank;
        jp["attach_node"] = p.attach_node + 1;
        jp["second_node"] = p.second_node + 1;
        {
            // node i here corresponds to Bourbaki node perm[i-1]
            json perm = json::array();
            if (f == PairFamily::g2) {
                perm.push_back(2);
                perm.push_back(1);
            } else {
                for (int i = 1; i <= p.g.rank; ++i) perm.push_back(i);
            }
            jp["bourbaki_permutation"] = perm;
        }
        jp["beta"] = lambda_json(p.beta());
        json sor = json::array();
        for (const auto& g : p.sor) sor.push_back(lambda_json(g));
        jp["strongly_orthogonal_roots"] = sor;
        json sat = json::array();
        for (auto c : p.satake)
            sat.push_back(c == SatakeClass::Real      ? "real"
                          : c == SatakeClass::Imaginary ? "imaginary"
                                                        : "complex");
        jp["satake"] = sat;
        json cp = json::array();
        for (auto [a, b] : p.complex_pairs) cp.push_back({a + 1, b + 1});
        jp["complex_pairs"] = cp;
        json hm;
        json zeros = json::array();
        for (int i : p.hm_zero_nodes) zeros.push_back(i + 1);
        json equals = json::array();
        for (auto [a, b] : p.hm_equal_pairs) equals.push_back({a + 1, b + 1});
        hm["zero_nodes"] = zeros;
        hm["equal_pairs"] = equals;
        jp["hm_constraints"] = hm;
        json ideals = json::array();
        for (const auto& ideal : p.k_ideals) {
            json ji;
            ji["type"] = std::string(1, (char)ideal.type) + std::to_string(ideal.rank);
            json nodes = json::array();
            for (int n : ideal.nodes) nodes.push_back(n + 1);
            ji["nodes"] = nodes;
            ideals.push_back(ji);
        }
        jp["k_ideals"] = ideals;
        if (p.has_d4_data()) {
            json d4 = json::array();
            for (const auto& d : p.d4_simple) d4.push_back(lambda_json(d));
            jp["d4_simple_roots"] = d4;
            json memb = json::array();
            for (int i : p.d4_membership) memb.push_back(i + 1);
            jp["d4_membership_nodes"] = memb;
        }
        json proj;
        auto table = projection_table(p);
        for (auto& [node, value] : table) {
            std::string kind;
            switch (value.kind) {
                case ProjectionKind::zero: kind = "0"; break;
                case ProjectionKind::neg_half_H: kind = "-1/2 H"; break;
                case ProjectionKind::pos_half_H: kind = "+1/2 H"; break;
                case ProjectionKind::half_EplusF: kind = "+1/2 (X + X^-)"; break;
                case ProjectionKind::neg_half_EplusF: kind = "-1/2 (X + X^-)"; break;
                case ProjectionKind::three_half_EplusF: kind = "+3/2 (X + X^-)"; break;
            }
            proj[std::to_string(node + 1)] = kind;
        }
        jp["projection_table_beta"] = proj;
        if (f == PairFamily::g2) {
            json proj2;
            auto t2 = projection_table(p, true);
            proj2["1"] = "+1/2 H";
            proj2["2"] = "-1/2 (X + X^-)";
            (void)t2;
            jp["projection_table_delta2"] = proj2;
        }
        pairs.push_back(jp);
    }
    out["exceptional_pairs"] = pairs;
    out["classical_families"] = {
        {{"family", "u"}, {"space", "U(n+2)/(U(2) x U(n))"}, {"n_min", 2},
         {"weight_arity", "n+2"}},
        {{"family", "so"}, {"space", "SO(n+4)/(SO(4) x SO(n))"}, {"n_min", 4},
         {"weight_arity", "floor((n+4)/2)"}},
        {{"family", "sp"}, {"space", "Sp(n+1)/(Sp(1) x Sp(n))"}, {"n_min", 1},
         {"weight_arity", "n+1"}},
    };
    return out.dump(2) + "\n";
}

std::string report_json(const Report& rep, const std::string& suite) {
    json j;
    j["schema"] = kSchemaVersion;
    j["suite"] = suite;
    j["pass"] = rep.pass();
    json checks = json::array();
    for (const auto& c : rep.checks) {
        json jc;
        jc["check"] = c.name;
        jc["pass"] = c.pass;
        if (!c.detail.empty()) jc["detail"] = c.detail;
        if (c.deviation != 0.0) jc["max_deviation"] = c.deviation;
        checks.push_back(jc);
    }
    j["checks"] = checks;
    return j.dump(2) + "\n";
}

}  // namespace qbranch
