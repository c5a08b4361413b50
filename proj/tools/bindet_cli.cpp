// Command-line front end.
//
//   bindet det --family E --s 2 --t 1 --n 2 [--mu 2]
//   bindet closed-form --id krat37nice --m 3 --r 2 [--mu 1/2]
//   bindet verify --suite all --max-m 4 --max-r 4 --max-n 9 --report out.json --jobs 8
//   bindet ansatz solve|verify|guess ...
//   bindet eps-limit --target quoED1 --m 3 [--r 1]
//   bindet tilings count|enumerate|svg ...
//
// BINDET_JOBS overrides the worker count when --jobs is not given.

#include "bindet/bindet.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace bindet;

namespace {

Rational parse_mu(const std::string& text) { return Rational::parse(text); }

void print_value(const RatFunc& v) {
    std::cout << v.str() << "\n";
    std::cout << "  = " << v.pretty() << "\n";
}

unsigned jobs_from_env() {
    if (const char* env = std::getenv("BINDET_JOBS")) {
        long j = std::strtol(env, nullptr, 10);
        if (j > 0) return static_cast<unsigned>(j);
    }
    return 0;
}

std::vector<std::pair<long, long>> rect_support(long a, long b) {
    std::vector<std::pair<long, long>> sup;
    for (long i = 0; i < a; ++i)
        for (long j = 0; j < b; ++j) sup.emplace_back(i, j);
    return sup;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact binomial-determinant toolkit"};
    app.require_subcommand(1);

    // --- det ---------------------------------------------------------------
    auto* det_cmd = app.add_subcommand("det", "family determinant, symbolic or at numeric mu");
    std::string det_family = "E", det_mu;
    long det_s = 0, det_t = 0, det_n = 1;
    det_cmd->add_option("--family", det_family, "D, E or B")->required();
    det_cmd->add_option("--s", det_s)->required();
    det_cmd->add_option("--t", det_t)->required();
    det_cmd->add_option("--n", det_n)->required();
    det_cmd->add_option("--mu", det_mu, "rational evaluation point, e.g. 2 or 5/3");

    // --- closed-form ---------------------------------------------------------
    auto* cf_cmd = app.add_subcommand("closed-form", "evaluate a closed-form expression by id");
    std::string cf_id, cf_mu;
    long cf_m = 1, cf_r = 0;
    bool cf_list = false;
    cf_cmd->add_option("--id", cf_id, "formula id (see --list)");
    cf_cmd->add_option("--m", cf_m);
    cf_cmd->add_option("--r", cf_r);
    cf_cmd->add_option("--mu", cf_mu, "rational evaluation point");
    cf_cmd->add_flag("--list", cf_list, "list available formula ids");

    // --- verify ---------------------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify", "run check suites and emit a JSON report");
    std::vector<std::string> verify_suites;
    long vmax_m = 4, vmax_r = 4, vmax_n = 9;
    unsigned vjobs = 0;
    std::string report_path;
    verify_cmd->add_option("--suite", verify_suites, "suite names or 'all'")->required();
    verify_cmd->add_option("--max-m", vmax_m);
    verify_cmd->add_option("--max-r", vmax_r);
    verify_cmd->add_option("--max-n", vmax_n);
    verify_cmd->add_option("--jobs", vjobs, "worker threads (default: BINDET_JOBS or all cores)");
    verify_cmd->add_option("--report", report_path, "write the JSON report to this path");

    // --- ansatz ----------------------------------------------------------------
    auto* ansatz_cmd = app.add_subcommand("ansatz", "holonomic-ansatz systems");
    ansatz_cmd->require_subcommand(1);
    auto* asolve = ansatz_cmd->add_subcommand("solve", "solve a characterizing system");
    std::string asys = "sys1";
    long a_s = 2, a_n = 2;
    asolve->add_option("--system", asys, "sys1|sys3|sys2|syseps")->required();
    asolve->add_option("--s", a_s);
    asolve->add_option("--n", a_n)->required();
    auto* averify = ansatz_cmd->add_subcommand("verify", "check a closing identity");
    std::string aident = "biglemma1";
    long av_s = 2, av_n = 2;
    averify->add_option("--identity", aident, "biglemma1|quoED1|biglemma2|sys2|eq3ansatz")->required();
    averify->add_option("--s", av_s);
    averify->add_option("--n", av_n)->required();
    auto* aguess = ansatz_cmd->add_subcommand("guess", "interpolate recurrences from sys1 data");
    std::string g_mu = "7", g_support = "1x2";
    long g_s = 2, g_max_n = 20, g_degree = 4, g_degree_n = -1, g_degree_k = -1;
    aguess->add_option("--system", asys, "only sys1 is supported")->check(CLI::IsMember({"sys1"}));
    aguess->add_option("--s", g_s);
    aguess->add_option("--mu", g_mu, "fixed rational mu");
    aguess->add_option("--max-n", g_max_n);
    aguess->add_option("--support", g_support, "AxB rectangle of (n,k) shifts");
    aguess->add_option("--degree", g_degree, "coefficient degree bound in n and k");
    aguess->add_option("--degree-n", g_degree_n, "degree bound in n (overrides --degree)");
    aguess->add_option("--degree-k", g_degree_k, "degree bound in k (overrides --degree)");

    // --- eps-limit -----------------------------------------------------------------
    auto* eps_cmd = app.add_subcommand("eps-limit", "epsilon->0 determinant-ratio limits");
    std::string eps_target = "quoED1";
    long e_r = 1, e_m = 1;
    eps_cmd->add_option("--target", eps_target, "biglemma2a|biglemma2b|quoED1")->required();
    eps_cmd->add_option("--r", e_r);
    eps_cmd->add_option("--m", e_m)->required();

    // --- tilings ----------------------------------------------------------------------
    auto* til_cmd = app.add_subcommand("tilings", "lattice paths, counts and figures");
    til_cmd->require_subcommand(1);
    std::string t_family = "E", t_out;
    long t_s = 2, t_t = 1, t_n = 2, t_mu = 2;
    long t_cap = 5000;
    auto* tcount = til_cmd->add_subcommand("count", "cyclically symmetric tiling count");
    tcount->add_option("--family", t_family)->required();
    tcount->add_option("--s", t_s)->required();
    tcount->add_option("--t", t_t)->required();
    tcount->add_option("--n", t_n)->required();
    tcount->add_option("--mu", t_mu)->required();
    auto* tenum = til_cmd->add_subcommand("enumerate", "brute-force nonintersecting path tuples");
    tenum->add_option("--s", t_s)->required();
    tenum->add_option("--t", t_t)->required();
    tenum->add_option("--n", t_n)->required();
    tenum->add_option("--mu", t_mu)->required();
    tenum->add_option("--cap", t_cap);
    auto* tsvg = til_cmd->add_subcommand("svg", "render the holey-hexagon region");
    tsvg->add_option("--s", t_s)->required();
    tsvg->add_option("--t", t_t)->required();
    tsvg->add_option("--n", t_n)->required();
    tsvg->add_option("--mu", t_mu)->required();
    tsvg->add_option("--out", t_out, "output file (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*det_cmd) {
            FamilySpec spec{family_from_letter(det_family.at(0)), det_s, det_t, det_n};
            Poly d = determinant(spec);
            if (det_mu.empty()) {
                std::cout << d.str() << "\n  = " << d.pretty() << "\n";
            } else {
                std::cout << d.eval(parse_mu(det_mu)).str() << "\n";
            }
            return 0;
        }
        if (*cf_cmd) {
            const auto& reg = closed_form_registry();
            if (cf_list) {
                for (const auto& entry : reg)
                    std::cout << entry.id << (entry.uses_r ? "  (m, r)" : "  (m)") << "\n";
                return 0;
            }
            for (const auto& entry : reg)
                if (entry.id == cf_id) {
                    RatFunc v = entry.eval(cf_m, cf_r);
                    if (cf_mu.empty())
                        print_value(v);
                    else
                        std::cout << v.eval(parse_mu(cf_mu)).str() << "\n";
                    return 0;
                }
            std::cerr << "unknown formula id '" << cf_id << "' (try --list)\n";
            return 2;
        }
        if (*verify_cmd) {
            for (const auto& name : verify_suites) {
                if (name == "all") continue;
                const auto& known = all_suite_names();
                if (std::find(known.begin(), known.end(), name) == known.end()) {
                    std::cerr << "unknown suite '" << name << "'; known:";
                    for (const auto& k : known) std::cerr << " " << k;
                    std::cerr << " all\n";
                    return 2;
                }
            }
            SuiteConfig cfg;
            cfg.suites = verify_suites;
            cfg.max_m = vmax_m;
            cfg.max_r = vmax_r;
            cfg.max_n = vmax_n;
            cfg.jobs = vjobs ? vjobs : jobs_from_env();
            Report rep = run_suite(cfg);
            std::string json = emit_report(rep);
            if (!report_path.empty()) {
                std::ofstream out(report_path);
                if (!out) {
                    std::cerr << "cannot write report to " << report_path << "\n";
                    return 3;
                }
                out << json;
            }
            long failed = 0;
            for (const auto& r : rep.records)
                if (!r.equal) {
                    ++failed;
                    std::cout << "FAIL " << r.key() << "\n     lhs " << r.lhs << "\n     rhs " << r.rhs << "\n";
                }
            std::cout << rep.records.size() << " checks, " << failed << " failed, "
                      << rep.elapsed_ms << " ms\n";
            return rep.all_equal ? 0 : 1;
        }
        if (*ansatz_cmd) {
            if (*asolve) {
                CofactorRatioVector c = solve_cofactor_system(system_from_name(asys), a_s, a_n);
                for (long k = c.first_index; k < c.first_index + static_cast<long>(c.values.size()); ++k)
                    std::cout << "c[" << c.n << "," << k << "] = " << c.at(k).str() << "\n";
                return 0;
            }
            if (*averify) {
                AnsatzVerdict v = verify_ansatz_identity(identity_from_name(aident), av_s, av_n);
                std::cout << (v.ok ? "ok" : "FAIL") << "  residual = " << v.residual.str() << "\n";
                return v.ok ? 0 : 1;
            }
            if (*aguess) {
                auto sep = g_support.find('x');
                if (sep == std::string::npos) {
                    std::cerr << "--support expects AxB\n";
                    return 2;
                }
                long sa = std::stol(g_support.substr(0, sep));
                long sb = std::stol(g_support.substr(sep + 1));
                long dn = g_degree_n >= 0 ? g_degree_n : g_degree;
                long dk = g_degree_k >= 0 ? g_degree_k : g_degree;
                Rational mu = parse_mu(g_mu);
                auto data = sys1_data(g_s, mu, std::max<long>(2, g_s), g_max_n);
                auto rec = guess_recurrence(data, rect_support(sa, sb), dn, dk);
                if (!rec) {
                    std::cout << "no recurrence found for support " << g_support << ", degrees ("
                              << dn << "," << dk << ")\n";
                    return 1;
                }
                auto held_out = sys1_data(g_s, mu, g_max_n + 1, g_max_n + 2);
                auto both = data;
                both.insert(held_out.begin(), held_out.end());
                bool valid = rec->annihilates(both);
                std::cout << rec->str() << "\n";
                std::cout << "validates on held-out n in {" << (g_max_n + 1) << "," << (g_max_n + 2)
                          << "}: " << (valid ? "yes" : "NO") << "\n";
                return valid ? 0 : 1;
            }
        }
        if (*eps_cmd) {
            EpsTarget target;
            if (eps_target == "biglemma2a")
                target = EpsTarget::Biglemma2A;
            else if (eps_target == "biglemma2b")
                target = EpsTarget::Biglemma2B;
            else if (eps_target == "quoED1")
                target = EpsTarget::QuoED1;
            else {
                std::cerr << "unknown target '" << eps_target << "'\n";
                return 2;
            }
            print_value(eps_limit_ratio({target, e_r, e_m}));
            return 0;
        }
        if (*til_cmd) {
            if (*tcount) {
                TilingCount c =
                    cyclic_tiling_count(family_from_letter(t_family.at(0)), t_s, t_t, t_n, t_mu);
                std::cout << c.value.get_str() << (c.weighted ? "  (signed count)" : "") << "\n";
                return 0;
            }
            if (*tenum) {
                auto tuples = enumerate_paths(PathProblem::full(t_mu, t_s, t_t, t_n), t_cap);
                std::cout << tuples.size() << " nonintersecting tuples\n";
                return 0;
            }
            if (*tsvg) {
                std::string svg = render_svg(build_region(t_s, t_t, t_n, t_mu));
                if (t_out.empty()) {
                    std::cout << svg;
                } else {
                    std::ofstream out(t_out, std::ios::binary);
                    if (!out) {
                        std::cerr << "cannot write " << t_out << "\n";
                        return 3;
                    }
                    out << svg;
                }
                return 0;
            }
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 4;
    }
    return 0;
}
