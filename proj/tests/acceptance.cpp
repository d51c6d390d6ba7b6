// Acceptance suite: every criterion at its stated bounds, one line each.
#include <chrono>
#include <cstdio>
#include <string>

#include "qbranch/formulas.hpp"
#include "qbranch/oracle.hpp"
#include "qbranch/so8_cayley.hpp"
#include "qbranch/suites.hpp"

using namespace qbranch;

namespace {

int failures = 0;

void report(int n, const std::string& what, const Report& rep, double secs,
            const std::string& note = "") {
    bool ok = rep.pass();
    if (!ok) ++failures;
    std::printf("[%s] criterion %d: %s (%.1fs)%s%s\n", ok ? "PASS" : "FAIL", n, what.c_str(),
                secs, note.empty() ? "" : " — ", note.c_str());
    if (!ok) {
        for (const auto& c : rep.checks)
            if (!c.pass)
                std::printf("       failed: %s%s%s\n", c.name.c_str(),
                            c.detail.empty() ? "" : ": ", c.detail.c_str());
    }
    std::fflush(stdout);
}

template <typename F>
std::pair<Report, double> timed(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    Report rep = f();
    auto t1 = std::chrono::steady_clock::now();
    return {rep, std::chrono::duration<double>(t1 - t0).count()};
}

}  // namespace

int main() {
    {
        auto [rep, secs] = timed([] { return run_kernel_suite(20, 41); });
        report(1, "joint kernel = closed form, exhaustive d<=20, lambda<=41", rep, secs);
    }
    {
        auto [rep, secs] = timed([] { return run_ks_suite(50, 20); });
        report(2, "Kac-Sylvester spectra and symmetries, d<=50", rep, secs,
               "eigen-equation K u_{2k} = -2k u_{2k}; u_{-2d} is the all-ones Perron "
               "vector with eigenvalue +2d");
    }
    {
        auto [rep, secs] = timed([] {
            Report r;
            r.merge(verify_so8_realization(1e-10));
            r.merge(verify_projection_tables(1e-10));
            return r;
        });
        report(3, "D4 Cayley verification of the projection tables, tol 1e-10", rep, secs,
               "cross projections P_delta_i(Z_j), i != j, are +-1/2(X'+X'^-), asserted "
               "exactly; no downstream computation consumes them");
    }
    {
        auto [rep, secs] = timed([] {
            Report r;
            for (auto f : {PairFamily::e6, PairFamily::e7, PairFamily::e8, PairFamily::f4})
                r.merge(verify_d4_subsystem(pair(f)));
            return r;
        });
        report(4, "D4-subsystem lemmas with exact membership indices", rep, secs);
    }
    Report oracle_rep;
    {
        auto [rep, secs] = timed([] { return run_oracle_suite({}, 2, 1000000); });
        oracle_rep = rep;
        // criterion 5: the triple-agreement lines
        Report triple;
        for (const auto& c : rep.checks)
            if (c.name.find("formula = kernel = oracle") != std::string::npos ||
                c.name.find("lambda=") != std::string::npos)
                triple.checks.push_back(c);
        report(5, "triple agreement formula = kernel = oracle, all pairs, coords <= 2", triple,
               secs);
    }
    {
        // criterion 6 is the twistor identity, folded into the same sweep;
        // recheck the series sums explicitly here (cheap).
        auto [rep, secs] = timed([] {
            Report r;
            bool ok = true;
            for (auto fam : {PairFamily::g2, PairFamily::f4, PairFamily::e6, PairFamily::e7,
                             PairFamily::e8}) {
                const auto& p = pair(fam);
                for (Int l1 = 0; l1 <= 2; ++l1)
                    for (Int l2 = 0; l2 <= 2; ++l2) {
                        IVec lam(p.g.rank, 0);
                        lam[p.attach_node] = l1;
                        lam[p.second_node] = l2;
                        for (G2Side side : fam == PairFamily::g2
                                               ? std::vector<G2Side>{G2Side::beta,
                                                                     G2Side::alpha2}
                                               : std::vector<G2Side>{G2Side::beta}) {
                            Int sum = 0;
                            for (auto [d, v] : mult_series(p, lam, side)) sum += v;
                            if (sum != twistor_formula(p, lam, side).value) ok = false;
                        }
                    }
            }
            r.add("sum over d of the multiplicity series equals the twistor formula", ok);
            return r;
        });
        // the oracle's l-fixed dimensions were compared inside the sweep
        Report r6;
        r6.add("twistor identity (series sum = closed form; oracle agreement in sweep)",
               rep.pass() && oracle_rep.pass());
        report(6, "twistor identity over the sweep", r6, secs);
    }
    {
        auto [rep, secs] = timed([] {
            Report r;
            const auto& g2 = pair(PairFamily::g2);
            KDecomposition adj = oracle_decomposition(g2, {1, 0});
            r.add("g2 adjoint = (Gamma_2 x 1) + (1 x Gamma_2) + (Gamma_1 x Gamma_3)",
                  adj.entries.size() == 3 && adj.coefficient({2, 0}) == 1 &&
                      adj.coefficient({0, 2}) == 1 && adj.coefficient({1, 3}) == 1);
            r.add("matches the closed forms at d=1",
                  mult_g2(g2, {1, 0}, 2, G2Side::beta).value == 1 &&
                      mult_g2(g2, {1, 0}, 2, G2Side::alpha2).value == 1 &&
                      twistor_g2(g2, {1, 0}, G2Side::beta).value == 1 &&
                      twistor_g2(g2, {1, 0}, G2Side::alpha2).value == 1);
            r.add("V(pi_2) has zero l_beta-fixed vectors",
                  oracle_twistor(g2, IVec{0, 1}, G2Side::beta) == 0 &&
                      twistor_g2(g2, {0, 1}, G2Side::beta).value == 0);
            return r;
        });
        report(7, "g2 spot checks (adjoint peeling, pi_2 twistor vanishing)", rep, secs);
    }
    {
        auto [rep, secs] = timed([] { return run_classical_suite(1000000); });
        report(8, "classical agreement (U(4) decomposition, Prop 6.5 sweep, Sp/SO anchors)",
               rep, secs);
    }
    {
        auto [rep, secs] = timed([] {
            // Mass conservation is asserted inside every oracle run above;
            // re-run a representative sample explicitly.
            Report r;
            bool ok = true;
            for (auto [fam, lam] : std::vector<std::pair<PairFamily, IVec>>{
                     {PairFamily::g2, {2, 2}},
                     {PairFamily::f4, {1, 1, 0, 0}},
                     {PairFamily::e6, {0, 1, 0, 1, 0, 0}}}) {
                const auto& p = pair(fam);
                Character ch = freudenthal(p.g, lam);
                if (ch.total_mass() != p.g.weyl_dimension(lam)) ok = false;
            }
            r.add("Weyl dimension equals the Freudenthal total mass (sampled; asserted on "
                  "every oracle run)",
                  ok);
            return r;
        });
        report(9, "consistency plumbing: dimension = character mass", rep, secs);
    }
    std::printf("%s\n", failures == 0 ? "ACCEPTANCE: ALL CRITERIA PASS"
                                      : "ACCEPTANCE: FAILURES PRESENT");
    return failures == 0 ? 0 : 1;
}
