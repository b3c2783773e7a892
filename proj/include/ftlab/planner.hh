#ifndef FTLAB_PLANNER_HH
#define FTLAB_PLANNER_HH

#include <string>
#include <vector>

#include "ftlab/fits.hh"

namespace ftlab {

enum class Underlying { c4c6, surface, steane, c4_steane };

std::string underlying_name(Underlying u);

// A concatenation plan: an underlying code (level for the concatenated
// families, odd distance for the surface code) topped by a nondecreasing
// sequence of high-rate [[2^r-1, 2^r-1-2r, 3]] stages.
struct ConcatChain {
    Underlying u = Underlying::c4c6;
    int u_param = 1;           // concatenation level, or surface distance
    std::vector<int> hamming;  // r per stage, nondecreasing, r in 3..7
};

// One row per concatenation level; N and K are exact products kept as doubles
// (they overflow 32-bit integers well before the chain ends).
struct LevelRow {
    std::string code;
    double N = 0, K = 0;
    double overhead = 0;  // N/K
};
std::vector<LevelRow> space_overhead(const ConcatChain& chain);

// Level-by-level composition of the fitted error curves: the underlying curve
// evaluated at p, then x -> a[r_l][r_{l+1}] x^2 per stage, the top stage
// using a[r_L][r_L + 1].  stages[i] is the rate entering level i (stages[0]
// = p); warnings flag inputs above the quadratic fits' validity (1e-3).
struct ComposeResult {
    double p_l = 0;
    std::vector<double> stages;
    std::vector<std::string> warnings;
    bool ok = false;  // false: missing constant or diverging recursion
};
ComposeResult compose_error(const ConcatChain& chain, double p, const CurveSet& c);

// Underlying-code curve alone (level/distance in u_param).
double underlying_error(Underlying u, int u_param, double p, const CurveSet& c);

// Exhaustive search over u_param and nondecreasing stage sequences minimizing
// overhead subject to compose_error <= target; ties broken by smaller N.
struct OptimizeResult {
    bool feasible = false;
    ConcatChain chain;
    double overhead = 0, p_l = 0, N = 0, K = 0;
};
OptimizeResult optimize_chain(Underlying u, double p, double target,
                              const CurveSet& c, int max_stages = 10,
                              int max_level = 10);

// Smallest odd distance (>= 3) whose surface curve meets the target;
// overhead counted as d^2 qubits per logical qubit (calibrated convention,
// see README).
struct SurfaceOverhead {
    bool feasible = false;
    int d = 0;
    double overhead = 0, p_l = 0;
};
SurfaceOverhead surface_overhead_for_target(double p, double target,
                                            const CurveSet& c);

// 1.8 n^3 + 0.003 n^3 lg n two-qubit gates for n-bit RSA factoring
double rsa_cnot_count(double n_bits);

// 1 / (ops_per_second * seconds): error budget matching a classical machine
double classical_error_budget(double ops_per_second, double seconds);

}  // namespace ftlab

#endif
