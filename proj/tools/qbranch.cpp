#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qbranch/cache.hpp"
#include "qbranch/io.hpp"
#include "qbranch/oracle.hpp"
#include "qbranch/suites.hpp"

using namespace qbranch;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitSuiteFailure = 3;

IVec parse_lambda(const std::string& s) {
    IVec out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        long long v = std::stoll(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("bad lambda entry '" + tok + "'");
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty lambda");
    return out;
}

G2Side parse_side(const std::string& v) {
    if (v == "beta") return G2Side::beta;
    if (v == "alpha2") return G2Side::alpha2;
    throw std::invalid_argument("variant must be beta or alpha2");
}

std::string node_diagram(PairFamily f) {
    switch (f) {
        case PairFamily::e6:
            return "e6 nodes (Bourbaki):      2\n"
                   "                          |\n"
                   "                  1 - 3 - 4 - 5 - 6   (active: 2, 4)";
        case PairFamily::e7:
            return "e7 nodes (Bourbaki):          2\n"
                   "                              |\n"
                   "                  1 - 3 - 4 - 5 ... 7  (active: 1, 3)";
        case PairFamily::e8:
            return "e8 nodes (Bourbaki): chain 1-3-4-5-6-7-8, node 2 on 4 (active: 8, 7)";
        case PairFamily::f4:
            return "f4 nodes (Bourbaki): 1 - 2 => 3 - 4 (active: 1, 2)";
        case PairFamily::g2:
            return "g2 nodes: 1 (long) === 2 (short); active: 1, 2";
        default:
            return "";
    }
}

void print_result(const QueryResult& r, const std::string& fmt) {
    if (fmt == "json")
        std::cout << format_json(r);
    else if (fmt == "csv")
        std::cout << format_csv(r);
    else
        std::cout << format_plain(r);
}

struct CommonArgs {
    std::string pair_name;
    int n = 0;
    std::string lambda_str;
    std::string variant = "beta";
    std::string engine = "formula";
    std::string format = "plain";
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_engine = true) {
    cmd->add_option("--pair", args.pair_name, "pair family: e6 e7 e8 f4 g2 u so sp")
        ->required();
    cmd->add_option("--n", args.n, "size parameter for classical families");
    cmd->add_option("--lambda", args.lambda_str,
                    "highest weight, comma separated (fundamental coordinates for "
                    "exceptional pairs, partition style for classical)")
        ->required();
    cmd->add_option("--variant", args.variant, "g2 sl2 factor: beta (default) or alpha2");
    if (with_engine)
        cmd->add_option("--engine", args.engine, "formula | kernel | oracle | all");
    cmd->add_option("--format", args.format, "plain | json | csv");
}

Int classical_mult_value(PairFamily fam, int n, const IVec& lam, Int m,
                         const std::string& engine) {
    if (engine == "formula") {
        if (fam == PairFamily::u) return u_mult(n, lam, m).value;
        if (fam == PairFamily::so) return so_mult(n, lam, m).value;
        return sp_mult(n, lam, m).value;
    }
    if (engine == "oracle") return classical_oracle_mult(fam, n, lam, m);
    if (engine == "kernel") {
        if (fam != PairFamily::so)
            throw std::invalid_argument("kernel engine is available for so only (via U(4))");
        auto fs = so_fixed_space(n, lam);
        return fs.nonzero ? u4_to_so4_kernel(fs.u4_weight, m) : 0;
    }
    throw std::invalid_argument("unknown engine '" + engine + "'");
}

Int classical_twistor_value(PairFamily fam, int n, const IVec& lam, const std::string& engine) {
    if (engine == "formula") {
        if (fam == PairFamily::u) return u_twistor(n, lam).value;
        if (fam == PairFamily::so) return so_twistor(n, lam).value;
        return sp_twistor(n, lam).value;
    }
    if (engine == "oracle") return classical_oracle_twistor(fam, n, lam);
    throw std::invalid_argument("engine '" + engine + "' not available for classical twistor");
}

int run_mult(const CommonArgs& args, Int m) {
    PairFamily fam = pair_family_from_string(args.pair_name);
    IVec lam = parse_lambda(args.lambda_str);
    G2Side side = parse_side(args.variant);

    QueryResult r;
    r.command = "mult";
    r.pair = args.pair_name;
    r.lambda = lam;
    r.m = m;
    r.provenance = args.engine;
    if (fam == PairFamily::g2) r.variant = args.variant;

    std::vector<std::string> engines;
    if (args.engine == "all") {
        engines = is_exceptional(fam) ? std::vector<std::string>{"formula", "kernel", "oracle"}
            : fam == PairFamily::so   ? std::vector<std::string>{"formula", "kernel", "oracle"}
                                      : std::vector<std::string>{"formula", "oracle"};
    } else {
        engines = {args.engine};
    }

    for (const std::string& eng : engines) {
        Int v;
        if (is_exceptional(fam)) {
            const QuaternionicPair& p = pair(fam);
            if (eng == "formula") {
                MultResult mr = mult_formula(p, lam, m, side);
                v = mr.value;
                r.conditions = mr.conditions;
            } else if (eng == "kernel") {
                v = kostant_multiplicity(p, lam, m, side);
            } else if (eng == "oracle") {
                v = oracle_multiplicity(p, lam, m, side);
            } else {
                throw std::invalid_argument("unknown engine '" + eng + "'");
            }
        } else {
            validate_classical_weight(fam, args.n, lam);
            if (eng == "formula") {
                MultResult mr = fam == PairFamily::u    ? u_mult(args.n, lam, m)
                                : fam == PairFamily::so ? so_mult(args.n, lam, m)
                                                        : sp_mult(args.n, lam, m);
                v = mr.value;
                r.conditions = mr.conditions;
            } else {
                v = classical_mult_value(fam, args.n, lam, m, eng);
            }
        }
        r.engine_values.emplace_back(eng, v);
    }
    r.value = r.engine_values.front().second;
    if (engines.size() > 1) {
        for (const auto& [name, v] : r.engine_values)
            if (v != r.value) r.engines_agree = false;
    } else {
        r.engine_values.clear();
    }
    r.n = args.n;
    print_result(r, args.format);
    return r.engines_agree ? kExitOk : kExitMismatch;
}

int run_twistor(const CommonArgs& args) {
    PairFamily fam = pair_family_from_string(args.pair_name);
    IVec lam = parse_lambda(args.lambda_str);
    G2Side side = parse_side(args.variant);

    QueryResult r;
    r.command = "twistor";
    r.pair = args.pair_name;
    r.lambda = lam;
    r.provenance = args.engine;
    r.n = args.n;
    if (fam == PairFamily::g2) r.variant = args.variant;

    std::vector<std::string> engines =
        args.engine == "all"
            ? (is_exceptional(fam) ? std::vector<std::string>{"formula", "kernel", "oracle"}
                                   : std::vector<std::string>{"formula", "oracle"})
            : std::vector<std::string>{args.engine};

    for (const std::string& eng : engines) {
        Int v;
        if (is_exceptional(fam)) {
            const QuaternionicPair& p = pair(fam);
            if (eng == "formula") {
                MultResult mr = twistor_formula(p, lam, side);
                v = mr.value;
                r.conditions = mr.conditions;
            } else if (eng == "kernel") {
                v = 0;
                Int bound = lam[p.attach_node] + lam[p.second_node];
                for (Int d = 0; d <= bound; ++d) v += kostant_multiplicity(p, lam, 2 * d, side);
            } else if (eng == "oracle") {
                v = oracle_twistor(p, lam, side);
            } else {
                throw std::invalid_argument("unknown engine '" + eng + "'");
            }
        } else {
            if (eng == "formula") {
                MultResult mr = fam == PairFamily::u    ? u_twistor(args.n, lam)
                                : fam == PairFamily::so ? so_twistor(args.n, lam)
                                                        : sp_twistor(args.n, lam);
                v = mr.value;
                r.conditions = mr.conditions;
            } else {
                v = classical_twistor_value(fam, args.n, lam, eng);
            }
        }
        r.engine_values.emplace_back(eng, v);
    }
    r.value = r.engine_values.front().second;
    if (engines.size() > 1) {
        for (const auto& [name, v] : r.engine_values)
            if (v != r.value) r.engines_agree = false;
    } else {
        r.engine_values.clear();
    }
    print_result(r, args.format);
    return r.engines_agree ? kExitOk : kExitMismatch;
}

int run_series(const CommonArgs& args) {
    PairFamily fam = pair_family_from_string(args.pair_name);
    if (!is_exceptional(fam))
        throw std::invalid_argument("series applies to exceptional pairs");
    IVec lam = parse_lambda(args.lambda_str);
    const QuaternionicPair& p = pair(fam);
    QueryResult r;
    r.command = "series";
    r.pair = args.pair_name;
    r.lambda = lam;
    r.provenance = "formula";
    if (fam == PairFamily::g2) r.variant = args.variant;
    r.series = mult_series(p, lam, parse_side(args.variant));
    print_result(r, args.format);
    return kExitOk;
}

int run_classical(const CommonArgs& args, Int m, bool twistor, bool fixed_space) {
    PairFamily fam = pair_family_from_string(args.pair_name);
    if (is_exceptional(fam))
        throw std::invalid_argument("classical applies to families u, so, sp");
    IVec lam = parse_lambda(args.lambda_str);
    validate_classical_weight(fam, args.n, lam);

    if (fixed_space) {
        if (fam == PairFamily::u) {
            for (auto [n1, n2] : u_fixed_space(args.n, lam))
                std::cout << "W(" << n1 << "," << n2 << ")\n";
        } else if (fam == PairFamily::so) {
            auto fs = so_fixed_space(args.n, lam);
            if (fs.nonzero) {
                std::cout << "U(4) weight (" << fs.u4_weight[0] << "," << fs.u4_weight[1] << ","
                          << fs.u4_weight[2] << "," << fs.u4_weight[3]
                          << ") restricted to SO(4)\n";
                for (const auto& [w, mult] : u4_to_so4_decomposition(fs.u4_weight))
                    std::cout << "  Gamma_" << w[0] << " x Gamma_" << w[1] << "  mult " << mult
                              << "\n";
            } else {
                std::cout << "(zero)\n";
            }
        } else {
            auto fs = sp_fixed_space(args.n, lam);
            if (fs.nonzero)
                std::cout << "S^" << fs.sl2_label << " (dim " << fs.sl2_label + 1 << ")\n";
            else
                std::cout << "(zero)\n";
        }
        return kExitOk;
    }

    CommonArgs sub = args;
    if (twistor) return run_twistor(sub);
    return run_mult(sub, m);
}

int run_table(const std::string& pair_name, Int max_level, const std::string& variant,
              const std::string& fmt, const std::string& output) {
    PairFamily fam = pair_family_from_string(pair_name);
    if (!is_exceptional(fam)) throw std::invalid_argument("table applies to exceptional pairs");
    const QuaternionicPair& p = pair(fam);
    G2Side side = parse_side(variant);

    // all dominant lambda with coordinate sum <= max_level, lexicographic
    std::vector<TableRow> rows;
    IVec lam(p.g.rank, 0);
    std::function<void(int, Int)> walk = [&](int pos, Int budget) {
        if (pos == p.g.rank) {
            for (auto [d, mult] : mult_series(p, lam, side))
                rows.push_back({lam, d, mult});
            return;
        }
        for (Int v = 0; v <= budget; ++v) {
            lam[pos] = v;
            walk(pos + 1, budget - v);
        }
        lam[pos] = 0;
    };
    walk(0, max_level);

    std::string text = format_table(rows, fmt, pair_name,
                                    fam == PairFamily::g2 ? variant : std::string());
    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output, std::ios::binary | std::ios::trunc);
        if (!out) throw std::invalid_argument("cannot open output file '" + output + "'");
        out << text;
    }
    return kExitOk;
}

int run_verify(const std::string& suite, Int max_d, Int max_lambda, Int ks_max_d,
               const std::string& pair_name, Int max_coord, Int max_dim) {
    bool all = suite == "all";
    Report rep;
    if (suite == "kernel" || all) rep.merge(run_kernel_suite(max_d, max_lambda));
    if (suite == "ks" || all) rep.merge(run_ks_suite(ks_max_d));
    if (suite == "d4-cayley" || all) rep.merge(run_d4_suite());
    if (suite == "oracle" || all) {
        std::vector<PairFamily> pairs;
        if (!pair_name.empty()) pairs.push_back(pair_family_from_string(pair_name));
        rep.merge(run_oracle_suite(pairs, max_coord, max_dim));
    }
    if (suite == "classical" || all) rep.merge(run_classical_suite(max_dim));
    if (rep.checks.empty()) throw std::invalid_argument("unknown suite '" + suite + "'");
    std::cout << report_json(rep, suite);
    return rep.pass() ? kExitOk : kExitSuiteFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"branching multiplicities for quaternionic symmetric and twistor spaces"};
    app.require_subcommand(1);
    app.footer(
        "node numbering (lambda coordinates, 1-based):\n"
        "  e6:  1-3-4-5-6 chain, 2 on node 4        active nodes 2, 4\n"
        "  e7:  1-3-4-5-6-7 chain, 2 on node 4      active nodes 1, 3\n"
        "  e8:  1-3-4-5-6-7-8 chain, 2 on node 4    active nodes 8, 7\n"
        "  f4:  1 - 2 => 3 - 4                      active nodes 1, 2\n"
        "  g2:  1 (long) == 2 (short)               active nodes 1, 2\n"
        "classical weights are partition style: u: n+2 entries, so: floor((n+4)/2), sp: n+1");

    CommonArgs margs;
    Int m = 0;
    auto* mult_cmd = app.add_subcommand("mult", "multiplicity of Gamma_m x 1 in V(lambda)");
    add_common(mult_cmd, margs);
    mult_cmd->add_option("--m", m, "sl2 weight of the probe k-type")->required();

    CommonArgs targs;
    auto* twistor_cmd =
        app.add_subcommand("twistor", "dimension of the space of l-fixed vectors");
    add_common(twistor_cmd, targs);

    CommonArgs sargs;
    auto* series_cmd = app.add_subcommand("series", "all d with nonzero multiplicity");
    add_common(series_cmd, sargs, false);

    CommonArgs cargs;
    Int cm = 0;
    bool ctwistor = false, cfixed = false;
    auto* classical_cmd = app.add_subcommand("classical", "classical family queries");
    add_common(classical_cmd, cargs);
    classical_cmd->add_option("--m", cm, "probe sl2 weight");
    classical_cmd->add_flag("--twistor", ctwistor, "compute the twistor dimension");
    classical_cmd->add_flag("--fixed-space", cfixed, "describe the fixed space");

    std::string tpair, tvariant = "beta", tfmt = "csv", toutput;
    Int max_level = 3;
    auto* table_cmd = app.add_subcommand("table", "golden multiplicity table");
    table_cmd->add_option("--pair", tpair)->required();
    table_cmd->add_option("--max-level", max_level, "max coordinate sum of lambda");
    table_cmd->add_option("--variant", tvariant);
    table_cmd->add_option("--format", tfmt, "csv | json | markdown");
    table_cmd->add_option("--output", toutput, "write to file instead of stdout");

    std::string vsuite = "all", vpair;
    Int vmax_d = 20, vmax_lambda = 41, vks_max_d = 50, vmax_coord = 2, vmax_dim = 1000000;
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("--suite", vsuite, "d4-cayley | kernel | ks | oracle | classical | all");
    verify_cmd->add_option("--max-d", vmax_d);
    verify_cmd->add_option("--max-lambda", vmax_lambda);
    verify_cmd->add_option("--ks-max-d", vks_max_d);
    verify_cmd->add_option("--pair", vpair, "restrict the oracle suite to one pair");
    verify_cmd->add_option("--max-coord", vmax_coord);
    verify_cmd->add_option("--max-dim", vmax_dim);

    auto* catalog_cmd = app.add_subcommand("catalog", "catalog data");
    std::string cat_fmt = "json";
    auto* export_cmd = catalog_cmd->add_subcommand("export", "dump all pair records");
    export_cmd->add_option("--format", cat_fmt, "json");

    auto* nodes_cmd = app.add_subcommand("nodes", "print the node numbering per pair");

    try {
        app.parse(argc, argv);
        if (mult_cmd->parsed()) return run_mult(margs, m);
        if (twistor_cmd->parsed()) return run_twistor(targs);
        if (series_cmd->parsed()) return run_series(sargs);
        if (classical_cmd->parsed()) return run_classical(cargs, cm, ctwistor, cfixed);
        if (table_cmd->parsed()) return run_table(tpair, max_level, tvariant, tfmt, toutput);
        if (verify_cmd->parsed())
            return run_verify(vsuite, vmax_d, vmax_lambda, vks_max_d, vpair, vmax_coord,
                              vmax_dim);
        if (catalog_cmd->parsed()) {
            if (cat_fmt != "json") throw std::invalid_argument("only json export is supported");
            std::cout << catalog_export_json();
            return kExitOk;
        }
        if (nodes_cmd->parsed()) {
            for (auto f : {PairFamily::e6, PairFamily::e7, PairFamily::e8, PairFamily::f4,
                           PairFamily::g2})
                std::cout << node_diagram(f) << "\n";
            return kExitOk;
        }
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitUsage : kExitOk;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
