#ifndef FTLAB_ESTIMATOR_HH
#define FTLAB_ESTIMATOR_HH

#include <cstdint>
#include <vector>

#include "ftlab/frame_sim.hh"
#include "ftlab/gadgets.hh"
#include "ftlab/noise.hh"
#include "ftlab/rng.hh"

namespace ftlab {

// Classical post-processing of one benchmark shot: decode every EC's
// measurement flips (shot bits xor reference bits), maintain the per-logical
// Pauli frame through the logical CNOTs, and compare the decoded final Bell
// parities against the frame.  Erased decodes substitute a random bit.
struct ShotOutcome {
    std::vector<uint8_t> fail;  // per logical qubit, OR of both pair tests
    int ver_class = -1;         // -1 all flags pass, i >= 0 only instance i fired,
                                // -2 more than one instance fired
    bool any_erasure = false;
};

ShotOutcome process_shot(const BenchmarkProgram& bp, const ShotRecord& ref,
                         const ShotRecord& rec, Rng& rng);

// Accumulated counts, partitioned by verification class.  Failure counts are
// summed over logical qubits.
struct ShotTally {
    uint64_t shots = 0;
    uint64_t pass_shots = 0, fail_pass = 0;
    std::vector<uint64_t> only_shots, only_fail;  // per verification instance
    uint64_t other_shots = 0, fail_other = 0;

    void merge(const ShotTally& o);
};

// Verification-failure accounting.  The rerun-on-failure correction term has
// two defensible readings of "verification failure probability"; per_gadget
// weights each instance's conditional failure rate by that instance's own
// firing probability, aggregate multiplies the summed conditionals by the
// total firing probability.  per_gadget is the default: the aggregate form
// overcounts by roughly the instance count and turns the correction into a
// spurious linear-in-p floor once the conditionals stop shrinking with p.
enum class Accounting {
    postselect_only,           // discard every shot with a fired flag
    leading_order,             // P = P0 + sum_i Pr[only i fires] * P_i
    leading_order_aggregate,   // P = P0 + P_ver * sum_i P_i
};

struct RateEstimate {
    double p_l = 0.0;         // per logical qubit per round
    double sigma_log10 = 0.0;
    bool ok = false;          // false when no failures (or no kept shots)
};

double sigma_log10_of(double failures, double trials);

ShotTally run_benchmark(const BenchmarkProgram& bp, const NoiseParams& np,
                        uint64_t shots, uint64_t seed, int threads = 1);

RateEstimate logical_cnot_rate(const BenchmarkProgram& bp, const ShotTally& tally,
                               Accounting acc);

}  // namespace ftlab

#endif
