// command-line front end: simulate / fit / compose / optimize / targets
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "ftlab/codes.hh"
#include "ftlab/estimator.hh"
#include "ftlab/fits.hh"
#include "ftlab/planner.hh"
#include "json.hpp"

using namespace ftlab;
using nlohmann::json;

namespace {

struct Common {
    std::string gamma = "p";  // p | p2 | p10
    std::string out;          // empty -> stdout
    std::string format = "json";
    uint64_t seed = 1;
};

double gamma_div_of(const std::string& g) { return g == "p2" ? 2.0 : g == "p10" ? 10.0 : 1.0; }
std::string gamma_key_of(const std::string& g) { return g == "p" ? "p1" : g; }

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--gamma", c.gamma, "idle-noise rule: p, p2 (p/2), p10 (p/10)")
        ->check(CLI::IsMember({"p", "p2", "p10"}));
    cmd->add_option("--out", c.out, "output path (default stdout)");
    cmd->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    if (const char* env = std::getenv("FTLAB_SEED")) c.seed = std::strtoull(env, nullptr, 10);
    cmd->add_option("--seed", c.seed, "master seed (env FTLAB_SEED)");
}

void emit(const Common& c, const json& doc, const std::string& csv) {
    std::ostream* os = &std::cout;
    std::ofstream f;
    if (!c.out.empty()) {
        f.open(c.out);
        if (!f) throw CLI::RuntimeError("cannot write " + c.out, 2);
        os = &f;
    }
    if (c.format == "json") *os << doc.dump(2) << "\n";
    else *os << csv;
}

Underlying underlying_of(const std::string& s) {
    if (s == "c4c6") return Underlying::c4c6;
    if (s == "surface") return Underlying::surface;
    if (s == "steane") return Underlying::steane;
    if (s == "c4_steane") return Underlying::c4_steane;
    throw CLI::ValidationError("unknown underlying code " + s);
}

json chain_json(const ConcatChain& chain) {
    return {{"underlying", underlying_name(chain.u)},
            {"param", chain.u_param},
            {"stages", chain.hamming}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fault-tolerance estimation toolkit"};
    app.require_subcommand(1);

    // ---- simulate ---------------------------------------------------------
    auto* sim = app.add_subcommand("simulate", "Monte Carlo logical CNOT error rates");
    Common sc;
    add_common(sim, sc);
    std::string code_name = "c4";
    int r = 3, r_next = -1, rounds = 10;
    std::vector<double> ps;
    uint64_t shots = 1000000;
    bool single_round = false;
    int threads = (int)std::thread::hardware_concurrency();
    std::string accounting = "postselect";
    sim->add_option("--code", code_name, "c4, c6, steane or hamming")
        ->check(CLI::IsMember({"c4", "c6", "steane", "hamming"}));
    sim->add_option("--r", r, "hamming parameter r (3..7)")->check(CLI::Range(3, 7));
    sim->add_option("--r-next", r_next, "record tag: r of the code concatenated above");
    sim->add_option("--p", ps, "physical error rates")->required();
    sim->add_option("--shots", shots, "shots per point");
    sim->add_option("--rounds", rounds, "benchmark rounds");
    sim->add_flag("--single-round", single_round, "one noisy round, divisor 1");
    sim->add_option("--threads", threads, "worker threads");
    sim->add_option("--accounting", accounting,
                    "postselect | leading (per-instance rerun correction) | "
                    "aggregate (total-failure-probability times summed conditionals)")
        ->check(CLI::IsMember({"postselect", "leading", "aggregate"}));

    sim->callback([&] {
        CssCode code = code_name == "c4" ? code_c4()
                     : code_name == "c6" ? code_c6()
                     : code_name == "steane" ? code_steane()
                                             : code_hamming(r);
        Accounting acc = accounting == "postselect" ? Accounting::postselect_only
                       : accounting == "leading" ? Accounting::leading_order
                                                 : Accounting::leading_order_aggregate;
        if (single_round) rounds = 1;
        BenchmarkProgram bp = build_cnot_benchmark(
            code, rounds, single_round ? BenchVariant::single_round : BenchVariant::full);
        json cfg = {{"subcommand", "simulate"}, {"code", code_name}, {"gamma", sc.gamma},
                    {"shots", shots}, {"seed", sc.seed}, {"rounds", rounds},
                    {"variant", single_round ? "single_round" : "full"},
                    {"accounting", accounting}, {"threads", threads}};
        if (code_name == "hamming") {
            cfg["r"] = r;
            cfg["r_next"] = r_next > 0 ? r_next : r + 1;
        }
        json records = json::array();
        std::string csv =
            "code,gamma,p,shots,seed,rounds,variant,accounting,p_l,sigma_log10,"
            "pass_shots,ver_failed,ok\n";
        for (double p : ps) {
            ShotTally t = run_benchmark(bp, NoiseParams::depolarizing(p, gamma_div_of(sc.gamma)),
                                        shots, sc.seed, threads);
            RateEstimate est = logical_cnot_rate(bp, t, acc);
            json rec = {{"p", p}, {"p_l", est.p_l}, {"sigma_log10", est.sigma_log10},
                        {"ok", est.ok}, {"pass_shots", t.pass_shots},
                        {"ver_failed", t.shots - t.pass_shots},
                        {"p_ver", 1.0 - (double)t.pass_shots / (double)t.shots}};
            if (code_name == "hamming") {
                rec["r"] = r;
                rec["r_next"] = r_next > 0 ? r_next : r + 1;
            }
            records.push_back(rec);
            char line[256];
            std::snprintf(line, sizeof line, "%s,%s,%g,%llu,%llu,%d,%s,%s,%g,%g,%llu,%llu,%d\n",
                          code_name.c_str(), sc.gamma.c_str(), p,
                          (unsigned long long)shots, (unsigned long long)sc.seed, rounds,
                          single_round ? "single_round" : "full", accounting.c_str(),
                          est.p_l, est.sigma_log10, (unsigned long long)t.pass_shots,
                          (unsigned long long)(t.shots - t.pass_shots), (int)est.ok);
            csv += line;
        }
        emit(sc, {{"config", cfg}, {"records", records}}, csv);
    });

    // ---- fit --------------------------------------------------------------
    auto* fit = app.add_subcommand("fit", "fit scaling curves to simulate output");
    Common fc;
    add_common(fit, fc);
    std::string in_path, model = "fixed";
    double exponent = 2.0;
    fit->add_option("--in", in_path, "JSON produced by simulate")->required();
    fit->add_option("--model", model, "fixed | power | c4c6")
        ->check(CLI::IsMember({"fixed", "power", "c4c6"}));
    fit->add_option("--exponent", exponent, "pinned exponent for --model fixed");
    fit->callback([&] {
        std::ifstream in(in_path);
        if (!in) throw CLI::RuntimeError("cannot read " + in_path, 2);
        json doc;
        in >> doc;
        std::vector<FitPoint> pts;
        std::vector<std::pair<int, FitPoint>> lvl_pts;
        for (const auto& rec : doc.at("records")) {
            FitPoint pt{rec.at("p"), rec.at("p_l"), rec.value("sigma_log10", 0.0)};
            pts.push_back(pt);
            lvl_pts.push_back({rec.value("level", 1), pt});
        }
        json out = {{"config", {{"subcommand", "fit"}, {"in", in_path}, {"model", model}}}};
        std::string csv;
        if (model == "c4c6") {
            C4c6Fit f = fit_c4c6(lvl_pts);
            if (!f.ok) throw CLI::RuntimeError("degenerate self-dual-chain fit", 2);
            out["c4c6"] = {{"A", f.A}, {"B", f.B}};
            csv = "A,B\n" + std::to_string(f.A) + "," + std::to_string(f.B) + "\n";
        } else {
            PowerFit f = model == "fixed" ? fit_fixed_exponent(pts, exponent)
                                          : fit_power_law(pts);
            if (!f.ok) throw CLI::RuntimeError("underdetermined or degenerate fit", 2);
            double ss = 0;
            for (const FitPoint& pt : pts) {
                double res = std::log10(pt.p_l) -
                             (std::log10(f.coeff) + f.exponent * std::log10(pt.p));
                ss += res * res;
            }
            out["fit"] = {{"coeff", f.coeff}, {"coeff_sigma", f.coeff_sigma},
                          {"exponent", f.exponent}, {"exponent_sigma", f.exponent_sigma},
                          {"residual_log10_sq", ss}};
            csv = "coeff,exponent\n" + std::to_string(f.coeff) + "," +
                  std::to_string(f.exponent) + "\n";
        }
        emit(fc, out, csv);
    });

    // ---- compose ----------------------------------------------------------
    auto* comp = app.add_subcommand("compose", "level-by-level error and overhead table");
    Common cc;
    add_common(comp, cc);
    std::string underlying = "c4c6", chain_arg = "table1";
    int level = 5;
    double comp_p = 1e-3;
    comp->add_option("--underlying", underlying, "c4c6 | surface | steane | c4_steane");
    comp->add_option("--level", level, "underlying level (surface: odd distance)");
    comp->add_option("--chain", chain_arg, "comma-separated stage r values, or table1");
    comp->add_option("--p", comp_p, "physical error rate");
    comp->callback([&] {
        ConcatChain chain;
        if (chain_arg == "table1") {
            chain = {Underlying::c4c6, 5, {5, 6, 7, 7}};
        } else {
            chain = {underlying_of(underlying), level, {}};
            if (!chain_arg.empty()) {
                std::stringstream ss(chain_arg);
                std::string tok;
                while (std::getline(ss, tok, ',')) chain.hamming.push_back(std::stoi(tok));
            }
        }
        CurveSet cs = load_constants(gamma_key_of(cc.gamma));
        auto rows = space_overhead(chain);
        ComposeResult res = compose_error(chain, comp_p, cs);
        json jrows = json::array();
        std::string csv = "level,code,N,K,overhead\n";
        for (size_t i = 0; i < rows.size(); i++) {
            jrows.push_back({{"level", i + 1}, {"code", rows[i].code}, {"N", rows[i].N},
                             {"K", rows[i].K}, {"overhead", rows[i].overhead}});
            csv += std::to_string(i + 1) + "," + rows[i].code + "," +
                   std::to_string((long long)rows[i].N) + "," +
                   std::to_string((long long)rows[i].K) + "," +
                   std::to_string(rows[i].overhead) + "\n";
        }
        emit(cc, {{"config", {{"subcommand", "compose"}, {"chain", chain_json(chain)},
                              {"p", comp_p}, {"gamma", cc.gamma}}},
                  {"levels", jrows}, {"p_l", res.p_l}, {"ok", res.ok},
                  {"warnings", res.warnings}},
             csv);
    });

    // ---- optimize ---------------------------------------------------------
    auto* opt = app.add_subcommand("optimize", "minimize overhead for a target error rate");
    Common oc;
    add_common(opt, oc);
    std::string opt_u = "c4c6";
    double opt_p = 1e-3, target = 1e-24;
    opt->add_option("--underlying", opt_u, "c4c6 | surface | steane | c4_steane");
    opt->add_option("--p", opt_p, "physical error rate")->required();
    opt->add_option("--target", target, "target logical error rate");
    opt->callback([&] {
        CurveSet cs = load_constants(gamma_key_of(oc.gamma));
        OptimizeResult r = optimize_chain(underlying_of(opt_u), opt_p, target, cs);
        json cfg = {{"subcommand", "optimize"}, {"underlying", opt_u}, {"p", opt_p},
                    {"target", target}, {"gamma", oc.gamma}};
        if (!r.feasible) {
            emit(oc, {{"config", cfg}, {"feasible", false}, {"overhead", "-"}},
                 "feasible,overhead\n0,-\n");
            throw CLI::RuntimeError("infeasible: no chain reaches the target", 3);
        }
        emit(oc, {{"config", cfg}, {"feasible", true}, {"chain", chain_json(r.chain)},
                  {"overhead", r.overhead}, {"N", r.N}, {"K", r.K}, {"p_l", r.p_l}},
             [&] {
                 char line[128];
                 std::snprintf(line, sizeof line, "feasible,overhead,p_l\n1,%g,%g\n",
                               r.overhead, r.p_l);
                 return std::string(line);
             }());
    });

    // ---- targets ----------------------------------------------------------
    auto* tgt = app.add_subcommand("targets", "application error-rate targets");
    Common tc;
    add_common(tgt, tc);
    double n_bits = 2048, ops = 5e17, seconds = 2.6e6;
    tgt->add_option("--n-bits", n_bits, "RSA modulus size");
    tgt->add_option("--ops", ops, "classical ops per second");
    tgt->add_option("--seconds", seconds, "classical runtime");
    tgt->callback([&] {
        double cnots = rsa_cnot_count(n_bits);
        double budget = classical_error_budget(ops, seconds);
        emit(tc,
             {{"config", {{"subcommand", "targets"}, {"n_bits", n_bits}, {"ops", ops},
                          {"seconds", seconds}}},
              {"rsa_cnot_count", cnots},
              {"rsa_target_rate", 1.0 / cnots},
              {"classical_error_budget", budget}},
             "rsa_cnot_count,classical_error_budget\n" + std::to_string(cnots) + "," +
                 std::to_string(budget) + "\n");
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::RuntimeError& e) {
        std::cerr << e.what() << "\n";
        return e.get_exit_code();  // 3 = infeasible, 2 = bad input
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 0;
}
