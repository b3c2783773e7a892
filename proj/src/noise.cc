#include "ftlab/noise.hh"

namespace ftlab {

int n_faults_at(LocKind k) {
    switch (k) {
        case LocKind::PrepZ:
        case LocKind::PrepX:
        case LocKind::MeasZ:
        case LocKind::MeasX: return 1;
        case LocKind::GateI:
        case LocKind::GateX:
        case LocKind::GateY:
        case LocKind::GateZ:
        case LocKind::GateH:
        case LocKind::GateS: return 3;
        case LocKind::Cnot: return 15;
    }
    return 0;
}

SitePauli fault_at(LocKind k, int j) {
    SitePauli f;
    switch (k) {
        case LocKind::PrepZ:
        case LocKind::MeasZ: f.xa = 1; break;
        case LocKind::PrepX:
        case LocKind::MeasX: f.za = 1; break;
        case LocKind::GateI:
        case LocKind::GateX:
        case LocKind::GateY:
        case LocKind::GateZ:
        case LocKind::GateH:
        case LocKind::GateS: {
            // j = 0,1,2 -> X, Y, Z
            f.xa = j <= 1;
            f.za = j >= 1;
            break;
        }
        case LocKind::Cnot: {
            int v = j + 1;  // 1..15, bits (xa za xb zb)
            f.xa = (v >> 3) & 1;
            f.za = (v >> 2) & 1;
            f.xb = (v >> 1) & 1;
            f.zb = v & 1;
            break;
        }
    }
    return f;
}

FaultMap sample_faults(const Circuit& c, const NoiseParams& np, Rng& rng) {
    FaultMap out;
    for (size_t i = 0; i < c.locs.size(); i++) {
        const Location& l = c.locs[i];
        if (l.noiseless) continue;
        double q = l.kind == LocKind::GateI ? np.gamma : np.p;
        if (q <= 0.0) continue;
        if (!rng.bernoulli(q)) continue;
        int nf = n_faults_at(l.kind);
        int j = nf == 1 ? 0 : (int)rng.below((uint64_t)nf);
        out[(int)i] = fault_at(l.kind, j);
    }
    return out;
}

}  // namespace ftlab
