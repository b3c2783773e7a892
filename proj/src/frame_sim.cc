#include "ftlab/frame_sim.hh"

namespace ftlab {

FrameSim::FrameSim(const Circuit& circuit, uint64_t ref_seed) : c(&circuit) {
    ref = tableau_run(circuit, {}, ref_seed);
}

template <class FaultFor>
ShotRecord FrameSim::run_core(FaultFor&& fault_for, Rng& rng, std::vector<uint8_t>* fx_out,
                              std::vector<uint8_t>* fz_out) const {
    std::vector<uint8_t> fx(c->n_qubits, 0), fz(c->n_qubits, 0);
    ShotRecord rec;
    rec.bits.assign(c->n_meas, 0);
    const auto& locs = c->locs;
    for (size_t i = 0; i < locs.size(); i++) {
        const Location& l = locs[i];
        int a = l.a;
        switch (l.kind) {
            case LocKind::PrepZ:
                fx[a] = 0;
                fz[a] = (uint8_t)rng.bit();
                break;
            case LocKind::PrepX:
                fz[a] = 0;
                fx[a] = (uint8_t)rng.bit();
                break;
            case LocKind::GateI:
                break;
            case LocKind::GateX:
            case LocKind::GateY:
            case LocKind::GateZ: {
                if (!l.ctrl.empty()) {
                    // apply iff the control parity differs from the reference run
                    int diff = 0;
                    for (int32_t m : l.ctrl) diff ^= rec.bits[m] ^ ref.bits[m];
                    if (diff) {
                        if (l.kind != LocKind::GateZ) fx[a] ^= 1;
                        if (l.kind != LocKind::GateX) fz[a] ^= 1;
                    }
                }
                // uncontrolled Paulis act identically in both runs: no frame change
                break;
            }
            case LocKind::GateH:
                std::swap(fx[a], fz[a]);
                break;
            case LocKind::GateS:
                fz[a] ^= fx[a];
                break;
            case LocKind::Cnot:
                fx[l.b] ^= fx[a];
                fz[a] ^= fz[l.b];
                break;
            case LocKind::MeasZ: {
                SitePauli f = fault_for(i, l);
                fx[a] ^= f.xa;
                fz[a] ^= f.za;
                rec.bits[l.meas_index] = (uint8_t)(ref.bits[l.meas_index] ^ fx[a]);
                fz[a] ^= (uint8_t)rng.bit();  // collapse
                continue;
            }
            case LocKind::MeasX: {
                SitePauli f = fault_for(i, l);
                fx[a] ^= f.xa;
                fz[a] ^= f.za;
                rec.bits[l.meas_index] = (uint8_t)(ref.bits[l.meas_index] ^ fz[a]);
                fx[a] ^= (uint8_t)rng.bit();
                continue;
            }
        }
        SitePauli f = fault_for(i, l);
        if (!f.trivial()) {
            fx[a] ^= f.xa;
            fz[a] ^= f.za;
            if (l.b >= 0) {
                fx[l.b] ^= f.xb;
                fz[l.b] ^= f.zb;
            }
        }
    }
    if (fx_out) *fx_out = std::move(fx);
    if (fz_out) *fz_out = std::move(fz);
    return rec;
}

ShotRecord FrameSim::run(const NoiseParams& np, Rng& rng) const {
    return run_core(
        [&](size_t, const Location& l) -> SitePauli {
            if (l.noiseless) return {};
            double q = l.kind == LocKind::GateI ? np.gamma : np.p;
            if (q <= 0.0 || !rng.bernoulli(q)) return {};
            int nf = n_faults_at(l.kind);
            int j = nf == 1 ? 0 : (int)rng.below((uint64_t)nf);
            return fault_at(l.kind, j);
        },
        rng, nullptr, nullptr);
}

ShotRecord FrameSim::run_with_faults(const FaultMap& faults, Rng& rng,
                                     std::vector<uint8_t>* fx_out,
                                     std::vector<uint8_t>* fz_out) const {
    return run_core(
        [&](size_t i, const Location&) -> SitePauli {
            auto it = faults.find((int)i);
            return it == faults.end() ? SitePauli{} : it->second;
        },
        rng, fx_out, fz_out);
}

}  // namespace ftlab
