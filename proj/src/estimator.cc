#include "ftlab/estimator.hh"

#include <cassert>
#include <cmath>
#include <thread>

#include "ftlab/decoders.hh"

namespace ftlab {

namespace {

Decoded decode_flips(const BenchmarkProgram& bp, const ShotRecord& ref,
                     const ShotRecord& rec, const std::vector<int32_t>& idx,
                     char basis) {
    std::vector<int> m(idx.size());
    for (size_t i = 0; i < idx.size(); i++) m[i] = rec.bits[idx[i]] ^ ref.bits[idx[i]];
    // decoding the flip pattern equals the decoded-shot xor decoded-reference
    // difference for these decoders (checks of the reference record are zero)
    return bp.code.distance >= 3 ? decode_correct(bp.code, m, basis)
                                 : decode_detect(bp.code, m, basis);
}

}  // namespace

ShotOutcome process_shot(const BenchmarkProgram& bp, const ShotRecord& ref,
                         const ShotRecord& rec, Rng& rng) {
    int K = bp.code.k;
    ShotOutcome out;
    out.fail.assign(K, 0);

    for (size_t i = 0; i < bp.ver_instances.size(); i++) {
        bool fired = false;
        for (const VerFlag& f : bp.ver_instances[i])
            fired |= (ref.parity(f.meas) ^ rec.parity(f.meas)) != 0;
        if (fired) out.ver_class = out.ver_class == -1 ? (int)i : -2;
    }

    auto value = [&](int b) {
        if (b >= 0) return (uint8_t)b;
        out.any_erasure = true;
        return (uint8_t)rng.bit();
    };

    // believed logical deviation of each data block relative to the reference
    std::vector<uint8_t> fx_c(K, 0), fz_c(K, 0), fx_t(K, 0), fz_t(K, 0);
    auto cnot_ct = [&]() {
        for (int k = 0; k < K; k++) {
            fx_t[k] ^= fx_c[k];
            fz_c[k] ^= fz_t[k];
        }
    };
    auto ec_update = [&](const BenchmarkProgram::EcMeta& ec, std::vector<uint8_t>& fx,
                         std::vector<uint8_t>& fz) {
        Decoded a = decode_flips(bp, ref, rec, ec.mx_data, 'X');  // Z-deviation class
        Decoded b = decode_flips(bp, ref, rec, ec.mz_anc, 'Z');   // X-deviation class
        for (int k = 0; k < K; k++) {
            fz[k] ^= value(a.bits[k]);
            fx[k] ^= value(b.bits[k]);
        }
        // Bell-detection byproducts: the two delivered halves carry independent
        // teleportation frames, and their difference is exactly the xor of the
        // detection stage's decoded classes
        for (int i = 0; i < 2 && !ec.det_mx[i].empty(); i++) {
            Decoded u = decode_flips(bp, ref, rec, ec.det_mx[i], 'X');
            Decoded w = decode_flips(bp, ref, rec, ec.det_mz[i], 'Z');
            for (int k = 0; k < K; k++) {
                fz[k] ^= value(u.bits[k]);
                fx[k] ^= value(w.bits[k]);
            }
        }
    };
    for (int r = 0; r < bp.rounds; r++) {
        cnot_ct();
        ec_update(bp.round_ecs[r][0], fx_c, fz_c);
        ec_update(bp.round_ecs[r][1], fx_t, fz_t);
    }
    if (bp.trailing_noiseless_cnot) cnot_ct();

    auto final_pair = [&](int p, const std::vector<uint8_t>& fx,
                          const std::vector<uint8_t>& fz) {
        Decoded u = decode_flips(bp, ref, rec, bp.final_mx_ref[p], 'X');
        Decoded v = decode_flips(bp, ref, rec, bp.final_mz_data[p], 'Z');
        for (int k = 0; k < K; k++)
            out.fail[k] |= (value(u.bits[k]) ^ fz[k]) | (value(v.bits[k]) ^ fx[k]);
    };
    final_pair(0, fx_c, fz_c);
    final_pair(1, fx_t, fz_t);
    return out;
}

void ShotTally::merge(const ShotTally& o) {
    shots += o.shots;
    pass_shots += o.pass_shots;
    fail_pass += o.fail_pass;
    other_shots += o.other_shots;
    fail_other += o.fail_other;
    if (only_shots.size() < o.only_shots.size()) {
        only_shots.resize(o.only_shots.size(), 0);
        only_fail.resize(o.only_fail.size(), 0);
    }
    for (size_t i = 0; i < o.only_shots.size(); i++) {
        only_shots[i] += o.only_shots[i];
        only_fail[i] += o.only_fail[i];
    }
}

ShotTally run_benchmark(const BenchmarkProgram& bp, const NoiseParams& np,
                        uint64_t shots, uint64_t seed, int threads) {
    if (threads < 1) threads = 1;
    uint64_t sm = seed;
    FrameSim sim(bp.circuit, splitmix64(sm));
    size_t ni = bp.ver_instances.size();

    auto worker = [&](uint64_t begin, uint64_t end, ShotTally* tally) {
        tally->only_shots.assign(ni, 0);
        tally->only_fail.assign(ni, 0);
        for (uint64_t s = begin; s < end; s++) {
            Rng rng = shot_rng(seed, s);
            ShotRecord rec = sim.run(np, rng);
            ShotOutcome o = process_shot(bp, sim.ref, rec, rng);
            uint64_t nf = 0;
            for (uint8_t f : o.fail) nf += f;
            tally->shots++;
            if (o.ver_class == -1) {
                tally->pass_shots++;
                tally->fail_pass += nf;
            } else if (o.ver_class >= 0) {
                tally->only_shots[o.ver_class]++;
                tally->only_fail[o.ver_class] += nf;
            } else {
                tally->other_shots++;
                tally->fail_other += nf;
            }
        }
    };

    std::vector<ShotTally> parts(threads);
    if (threads == 1) {
        worker(0, shots, &parts[0]);
    } else {
        std::vector<std::thread> pool;
        uint64_t chunk = shots / threads;
        for (int t = 0; t < threads; t++) {
            uint64_t b = t * chunk;
            uint64_t e = t == threads - 1 ? shots : b + chunk;
            pool.emplace_back(worker, b, e, &parts[t]);
        }
        for (auto& th : pool) th.join();
    }
    ShotTally total = std::move(parts[0]);
    for (int t = 1; t < threads; t++) total.merge(parts[t]);
    return total;
}

double sigma_log10_of(double failures, double trials) {
    if (failures <= 0 || trials <= 0) return 0.0;
    double p = failures / trials;
    double sp = std::sqrt(p * (1.0 - p) / trials);
    return sp / (p * std::log(10.0));
}

RateEstimate logical_cnot_rate(const BenchmarkProgram& bp, const ShotTally& tally,
                               Accounting acc) {
    RateEstimate est;
    int K = bp.code.k;
    double denom = (double)tally.pass_shots * K * bp.divisor;
    if (denom <= 0) return est;
    double p0 = tally.fail_pass / denom;
    double var0 = p0 * (1.0 - p0) / denom;
    double p = p0, var = var0;
    if (acc == Accounting::leading_order) {
        // sum_i Pr[only i fires] * P_i collapses to the plain failure count of
        // single-instance shots over the full shot denominator
        double fails = 0.0;
        for (uint64_t f : tally.only_fail) fails += f;
        double dall = (double)tally.shots * K * bp.divisor;
        double corr = fails / dall;
        p = p0 + corr;
        var = var0 + corr * (1.0 - corr) / dall;
    } else if (acc == Accounting::leading_order_aggregate) {
        double pver = 1.0 - (double)tally.pass_shots / (double)tally.shots;
        double var_pver = pver * (1.0 - pver) / (double)tally.shots;
        double sum_pi = 0.0, var_sum = 0.0;
        for (size_t i = 0; i < tally.only_shots.size(); i++) {
            if (!tally.only_shots[i]) continue;
            double di = (double)tally.only_shots[i] * K * bp.divisor;
            double pi = tally.only_fail[i] / di;
            sum_pi += pi;
            var_sum += pi * (1.0 - pi) / di;
        }
        p = p0 + pver * sum_pi;
        var = var0 + pver * pver * var_sum + sum_pi * sum_pi * var_pver;
    }
    if (p <= 0) return est;
    est.p_l = p;
    est.sigma_log10 = std::sqrt(var) / (p * std::log(10.0));
    est.ok = true;
    return est;
}

}  // namespace ftlab
