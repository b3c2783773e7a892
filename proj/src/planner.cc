#include "ftlab/planner.hh"

#include <cmath>

namespace ftlab {

std::string underlying_name(Underlying u) {
    switch (u) {
        case Underlying::c4c6: return "c4c6";
        case Underlying::surface: return "surface";
        case Underlying::steane: return "steane";
        case Underlying::c4_steane: return "c4_steane";
    }
    return "?";
}

namespace {

int hamming_n(int r) { return (1 << r) - 1; }
int hamming_k(int r) { return (1 << r) - 1 - 2 * r; }

// level-l seven-qubit-code recursion applied to an input rate x
double steane_apply(int level, double x, const CurveSet& c) {
    if (x >= 1.0) return 1.0;
    double v;
    if (level == 1) v = c.steane_a1 * x * x;
    else if (level == 2) v = c.steane_a2 * x * x * x * x;
    else if (level % 2 == 1) v = steane_apply(1, steane_apply(level - 1, x, c), c);
    else v = steane_apply(2, steane_apply(level - 2, x, c), c);
    return std::min(v, 1.0);
}

}  // namespace

double underlying_error(Underlying u, int u_param, double p, const CurveSet& c) {
    if (p <= 0) return 0.0;
    switch (u) {
        case Underlying::c4c6:
            return c.c4c6_A * std::pow(c.c4c6_B * p, (double)fibonacci(u_param));
        case Underlying::surface:
            return c.surf_A * std::pow(c.surf_B * p, (u_param + 1) / 2.0);
        case Underlying::steane:
            return steane_apply(u_param, p, c);
        case Underlying::c4_steane: {
            if (u_param == 1) return c.c4c6_A * c.c4c6_B * p;
            double l2 = std::min(c.c4_steane_a2 * p * p * p, 1.0);
            return u_param == 2 ? l2 : steane_apply(u_param - 2, l2, c);
        }
    }
    return 1.0;
}

std::vector<LevelRow> space_overhead(const ConcatChain& chain) {
    std::vector<LevelRow> rows;
    double N = 1, K = 1;
    auto push = [&](const std::string& name, int n_mul, int k_mul) {
        N *= n_mul;
        K *= k_mul;
        rows.push_back({name, N, K, N / K});
    };
    switch (chain.u) {
        case Underlying::c4c6:
            push("C4 [[4,2,2]]", 4, 2);
            for (int l = 2; l <= chain.u_param; l++) push("C6 [[6,2,2]]", 3, 1);
            break;
        case Underlying::surface:
            push("surface d=" + std::to_string(chain.u_param),
                 chain.u_param * chain.u_param, 1);
            break;
        case Underlying::steane:
            for (int l = 1; l <= chain.u_param; l++) push("Steane [[7,1,3]]", 7, 1);
            break;
        case Underlying::c4_steane:
            push("C4 [[4,2,2]]", 4, 2);
            for (int l = 2; l <= chain.u_param; l++) push("Steane [[7,1,3]]", 7, 1);
            break;
    }
    for (int r : chain.hamming) {
        std::string name = "Q" + std::to_string(r) + " [[" +
                           std::to_string(hamming_n(r)) + "," +
                           std::to_string(hamming_k(r)) + ",3]]";
        push(name, hamming_n(r), hamming_k(r));
    }
    return rows;
}

ComposeResult compose_error(const ConcatChain& chain, double p, const CurveSet& c) {
    ComposeResult res;
    double x = underlying_error(chain.u, chain.u_param, p, c);
    res.stages.push_back(p);
    res.ok = std::isfinite(x) && x < 1.0;
    if (x >= 1.0) res.warnings.push_back("underlying code does not suppress at this p");
    int L = (int)chain.hamming.size();
    for (int i = 0; i < L; i++) {
        res.stages.push_back(x);
        int r = chain.hamming[i];
        int rn = i + 1 < L ? chain.hamming[i + 1] : chain.hamming[i] + 1;
        auto it = c.hamming_a.find(r);
        if (it == c.hamming_a.end() || !it->second.count(rn)) {
            res.warnings.push_back("no constant for stage " + std::to_string(r) +
                                   " -> " + std::to_string(rn));
            res.ok = false;
            return res;
        }
        if (x > 1e-3)
            res.warnings.push_back("stage " + std::to_string(i) +
                                   " input above quadratic-fit validity (1e-3)");
        x = std::min(it->second.at(rn) * x * x, 1.0);
        if (x >= 1.0) res.ok = false;
    }
    res.p_l = x;
    return res;
}

OptimizeResult optimize_chain(Underlying u, double p, double target,
                              const CurveSet& c, int max_stages, int max_level) {
    OptimizeResult best;
    auto consider = [&](const ConcatChain& chain) {
        ComposeResult comp = compose_error(chain, p, c);
        if (!comp.ok || comp.p_l > target) return;
        const LevelRow& last = space_overhead(chain).back();
        if (!best.feasible || last.overhead < best.overhead ||
            (last.overhead == best.overhead && last.N < best.N)) {
            best = {true, chain, last.overhead, comp.p_l, last.N, last.K};
        }
    };

    std::vector<int> params;
    if (u == Underlying::surface) {
        for (int d = 3; d <= 151; d += 2) params.push_back(d);
    } else {
        for (int l = 1; l <= max_level; l++) params.push_back(l);
    }
    for (int up : params) {
        ConcatChain chain{u, up, {}};
        // depth-first over nondecreasing stage sequences; overhead only grows
        // with depth, so stop extending once past the incumbent
        auto dfs = [&](auto&& self, int min_r) -> void {
            consider(chain);
            if ((int)chain.hamming.size() >= max_stages) return;
            if (best.feasible &&
                space_overhead(chain).back().overhead >= best.overhead)
                return;
            for (int r = min_r; r <= 7; r++) {
                chain.hamming.push_back(r);
                self(self, r);
                chain.hamming.pop_back();
            }
        };
        dfs(dfs, 3);
    }
    return best;
}

SurfaceOverhead surface_overhead_for_target(double p, double target,
                                            const CurveSet& c) {
    SurfaceOverhead res;
    if (c.surf_B * p >= 1.0) return res;  // above threshold: no d helps
    for (int d = 3; d <= 2001; d += 2) {
        double pl = underlying_error(Underlying::surface, d, p, c);
        if (pl <= target) {
            res = {true, d, (double)d * d, pl};
            return res;
        }
    }
    return res;
}

double rsa_cnot_count(double n_bits) {
    double n3 = n_bits * n_bits * n_bits;
    return 1.8 * n3 + 0.003 * n3 * std::log2(n_bits);
}

double classical_error_budget(double ops_per_second, double seconds) {
    return 1.0 / (ops_per_second * seconds);
}

}  // namespace ftlab
