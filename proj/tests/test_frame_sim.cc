#include "ftlab/frame_sim.hh"

#include <cmath>
#include <map>

#include "doctest.h"
#include "ftlab/noise.hh"
#include "ftlab/tableau.hh"

using namespace ftlab;

namespace {

// random circuit with preps, Cliffords, measurements and classically
// controlled corrections, ~5 recorded bits
Circuit random_circuit(Rng& gen, int n = 4, int len = 60, int max_meas = 5) {
    Circuit c;
    for (int q = 0; q < n; q++) c.add(gen.bit() ? LocKind::PrepX : LocKind::PrepZ, q);
    std::vector<int32_t> meas;
    for (int step = 0; step < len; step++) {
        int q = (int)gen.below(n);
        switch (gen.below(8)) {
            case 0: c.add(LocKind::GateH, q); break;
            case 1: c.add(LocKind::GateS, q); break;
            case 2: {
                int q2 = (int)gen.below(n);
                if (q2 == q) q2 = (q + 1) % n;
                c.add(LocKind::Cnot, q, q2);
                break;
            }
            case 3: c.add(gen.bit() ? LocKind::PrepZ : LocKind::PrepX, q); break;
            case 4:
            case 5: {
                if ((int)meas.size() >= max_meas) break;
                int i = c.add(gen.bit() ? LocKind::MeasZ : LocKind::MeasX, q);
                meas.push_back(c.locs[i].meas_index);
                break;
            }
            case 6: {
                if (meas.empty()) break;
                std::vector<int32_t> ctrl = {meas[gen.below(meas.size())]};
                if (meas.size() > 1 && gen.bit()) ctrl.push_back(meas[gen.below(meas.size())]);
                LocKind k = (LocKind)((int)LocKind::GateX + (int)gen.below(3));
                c.add_correction(k, q, ctrl);
                break;
            }
            case 7: c.add(LocKind::GateI, q); break;
        }
    }
    return c;
}

uint64_t record_key(const ShotRecord& r) {
    uint64_t k = 0;
    for (size_t i = 0; i < r.bits.size(); i++) k |= (uint64_t)r.bits[i] << i;
    return k;
}

double tvd(const std::map<uint64_t, int>& a, const std::map<uint64_t, int>& b, int n) {
    std::map<uint64_t, double> d;
    for (auto& [k, v] : a) d[k] += (double)v / n;
    for (auto& [k, v] : b) d[k] -= (double)v / n;
    double t = 0;
    for (auto& [k, v] : d) t += std::abs(v);
    return t / 2;
}

}  // namespace

TEST_CASE("frame shots reproduce tableau output distribution under fixed faults") {
    Rng gen(424242);
    const int shots = 16000;
    for (int trial = 0; trial < 6; trial++) {
        Circuit c = random_circuit(gen);
        // pick a random fault configuration of ~3 faults
        FaultMap faults;
        for (int f = 0; f < 3; f++) {
            int i = (int)gen.below(c.locs.size());
            const Location& l = c.locs[i];
            if (l.noiseless) continue;
            faults[i] = fault_at(l.kind, (int)gen.below((uint64_t)n_faults_at(l.kind)));
        }
        FrameSim fs(c, 31337 + trial);
        std::map<uint64_t, int> ht, hf;
        for (int s = 0; s < shots; s++) {
            ht[record_key(tableau_run(c, faults, 1000003ULL * trial + s))]++;
            Rng rng = shot_rng(555 + trial, s);
            hf[record_key(fs.run_with_faults(faults, rng))]++;
        }
        CHECK(tvd(ht, hf, shots) < 0.05);
    }
}

TEST_CASE("noiseless frame shots: deterministic parities hold, random bits resample") {
    // GHZ: individual Z outcomes are random per shot, but all four must agree.
    Circuit c;
    for (int q = 0; q < 4; q++) c.add(LocKind::PrepZ, q);
    c.add(LocKind::GateH, 0);
    for (int q = 1; q < 4; q++) c.add(LocKind::Cnot, q - 1, q);
    for (int q = 0; q < 4; q++) c.add(LocKind::MeasZ, q);
    FrameSim fs(c, 99);
    NoiseParams np = NoiseParams::depolarizing(0.0);
    int saw[2] = {0, 0};
    for (int s = 0; s < 200; s++) {
        Rng rng = shot_rng(1, s);
        ShotRecord r = fs.run(np, rng);
        CHECK(r.bits[1] == r.bits[0]);
        CHECK(r.bits[2] == r.bits[0]);
        CHECK(r.bits[3] == r.bits[0]);
        saw[r.bits[0]]++;
    }
    CHECK(saw[0] > 50);  // the random bit really does vary across shots
    CHECK(saw[1] > 50);
}

TEST_CASE("frame shots are deterministic in the shot seed") {
    Rng gen(8);
    Circuit c = random_circuit(gen);
    FrameSim fs(c, 99);
    NoiseParams np = NoiseParams::depolarizing(0.05);
    for (int s = 0; s < 20; s++) {
        Rng r1 = shot_rng(77, s), r2 = shot_rng(77, s);
        CHECK(fs.run(np, r1).bits == fs.run(np, r2).bits);
    }
}

TEST_CASE("sampled-noise flip rate matches the analytic value") {
    // prep_0 (X w.p. p) ; X gate (flip w.p. 2p/3) ; meas_Z (X w.p. p):
    // outcome 1 iff an odd number of the three flips fired.
    Circuit c;
    c.add(LocKind::PrepZ, 0);
    c.add(LocKind::GateX, 0);
    c.add(LocKind::MeasZ, 0);
    double p = 0.3;
    auto xor3 = [](double a, double b, double c0) {
        double ab = a * (1 - b) + b * (1 - a);
        return ab * (1 - c0) + c0 * (1 - ab);
    };
    double want = 1.0 - xor3(p, 2 * p / 3, p);  // the X gate makes the clean outcome 1
    FrameSim fs(c, 5);
    NoiseParams np = NoiseParams::depolarizing(p);
    const int shots = 40000;
    int ones_frame = 0, ones_tab = 0;
    for (int s = 0; s < shots; s++) {
        Rng rng = shot_rng(9, s);
        ones_frame += fs.run(np, rng).bits[0];
        Rng rng2 = shot_rng(10, s);
        FaultMap f = sample_faults(c, np, rng2);
        ones_tab += tableau_run(c, f, 123 + s).bits[0];
    }
    CHECK(std::abs(ones_frame / (double)shots - want) < 0.01);
    CHECK(std::abs(ones_tab / (double)shots - want) < 0.01);
}

TEST_CASE("idle errors use gamma, not p") {
    Circuit c;
    c.add(LocKind::PrepZ, 0);
    c.add(LocKind::GateI, 0);
    c.add(LocKind::MeasZ, 0);
    FrameSim fs(c, 5);
    NoiseParams np = NoiseParams::depolarizing(0.3, 10.0);  // gamma = p/10
    const int shots = 40000;
    int ones = 0;
    for (int s = 0; s < shots; s++) {
        Rng rng = shot_rng(11, s);
        ones += fs.run(np, rng).bits[0];
    }
    // flips: prep p, idle 2*gamma/3, meas p
    double g = 0.03;
    auto x2 = [](double a, double b) { return a * (1 - b) + b * (1 - a); };
    double want = x2(x2(0.3, 2 * g / 3), 0.3);
    CHECK(std::abs(ones / (double)shots - want) < 0.01);
}
