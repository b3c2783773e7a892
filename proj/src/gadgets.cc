#include "ftlab/gadgets.hh"

#include <algorithm>
#include <cassert>
#include <climits>

namespace ftlab {

namespace {

bool latin_rank(const CssCode& c, int* r_out) {
    if (c.name == "steane") {
        *r_out = 3;
        return true;
    }
    if (c.name.rfind("hamming", 0) == 0) {
        *r_out = std::stoi(c.name.substr(7));
        return true;
    }
    return false;
}

Circuit encoder_circuit(const CssCode& c, char basis) {
    int r;
    if (latin_rank(c, &r)) return latin_encode_circuit(load_latin(r), basis);
    return basis == 'Z' ? encode_zero_circuit(c) : encode_plus_circuit(c);
}

}  // namespace

int GadgetBuilder::new_qubit(bool protect) {
    protected_.push_back(protect ? 1 : 0);
    return n_qubits_++;
}

Block GadgetBuilder::new_block(bool protect) {
    Block b;
    b.code = code_;
    for (int i = 0; i < code_->n; i++) b.q.push_back(new_qubit(protect));
    return b;
}

void GadgetBuilder::protect_block(const Block& b) {
    for (int q : b.q) protected_[q] = 1;
}

void GadgetBuilder::op(int layer, LocKind k, int a, int b, bool noiseless) {
    assert(layer >= 0 && a >= 0 && a < n_qubits_ && b < n_qubits_);
    while ((int)layers_.size() <= layer) layers_.emplace_back();
    Location l;
    l.kind = k;
    l.a = a;
    l.b = b;
    l.noiseless = noiseless;
    layers_[layer].push_back(std::move(l));
}

int GadgetBuilder::add_meas(int layer, LocKind k, int q, bool noiseless) {
    assert(is_measurement(k));
    while ((int)layers_.size() <= layer) layers_.emplace_back();
    Location l;
    l.kind = k;
    l.a = q;
    l.noiseless = noiseless;
    l.meas_index = n_meas_++;
    int idx = l.meas_index;
    layers_[layer].push_back(std::move(l));
    return idx;
}

void GadgetBuilder::corr(int layer, LocKind pauli, int q, std::vector<int32_t> ctrl) {
    assert(is_pauli_gate(pauli));
    while ((int)layers_.size() <= layer) layers_.emplace_back();
    Location l;
    l.kind = pauli;
    l.a = q;
    l.ctrl = std::move(ctrl);
    l.noiseless = true;
    layers_[layer].push_back(std::move(l));
}

// schedule the encoder's prep/CNOT list onto the block, list-scheduling CNOTs
// greedily; preps are emitted just in time (one layer before first use) so
// waiting qubits don't sit exposed to idle noise.  Optionally reports when
// each qubit becomes free.  Returns the next free layer.
static int place_encoder(GadgetBuilder& gb, const CssCode& c, char basis,
                         const Block& blk, int start, bool noiseless,
                         std::vector<int>* free_out = nullptr) {
    Circuit enc = encoder_circuit(c, basis);
    std::vector<int> free_at(c.n, start + 1), prep_layer(c.n, -1);
    std::vector<LocKind> prep_kind(c.n, LocKind::PrepZ);
    int end = start + 1;
    for (const Location& l : enc.locs) {
        if (is_prep(l.kind)) {
            prep_kind[l.a] = l.kind;
        } else {
            assert(l.kind == LocKind::Cnot);
            int t = std::max(free_at[l.a], free_at[l.b]);
            for (int q : {(int)l.a, (int)l.b})
                if (prep_layer[q] < 0) prep_layer[q] = t - 1;
            gb.op(t, LocKind::Cnot, blk.q[l.a], blk.q[l.b], noiseless);
            free_at[l.a] = free_at[l.b] = t + 1;
            end = std::max(end, t + 1);
        }
    }
    for (int q = 0; q < c.n; q++) {
        if (prep_layer[q] < 0) {  // never coupled: prep as late as possible
            prep_layer[q] = end - 1;
            free_at[q] = end;
        }
        gb.op(prep_layer[q], prep_kind[q], blk.q[q], -1, noiseless);
    }
    if (free_out) *free_out = free_at;
    return end;
}

Block GadgetBuilder::prep_unverified(char basis, int start, bool noiseless, int* end) {
    Block b = new_block();
    int e = place_encoder(*this, *code_, basis, b, start, noiseless);
    if (end) *end = e;
    return b;
}

// 8-qubit verified preparation for the 4-qubit distance-2 code: two physical
// Bell pairs, each of the two weight-2 Z checks (Z1Z2 and Z0Z3 for |00>,
// duals for |++>) measured twice on fresh ancillas, the first outcome keys an
// X2X3 fixup, and any odd total parity marks the attempt as discarded.
static GadgetBuilder::Prep prep_c4(GadgetBuilder& gb, char basis, int s, bool nl) {
    bool dual = basis == 'X';
    LocKind p0 = dual ? LocKind::PrepX : LocKind::PrepZ;
    LocKind pp = dual ? LocKind::PrepZ : LocKind::PrepX;
    LocKind mk = dual ? LocKind::MeasX : LocKind::MeasZ;
    LocKind ck = dual ? LocKind::GateZ : LocKind::GateX;
    auto cx = [&](int t, int c, int tg) {
        if (dual) std::swap(c, tg);
        gb.op(t, LocKind::Cnot, c, tg, nl);
    };
    Block d = gb.new_block();
    int a0 = gb.new_qubit(), a1 = gb.new_qubit();
    int a2 = gb.new_qubit(), a3 = gb.new_qubit();
    gb.op(s, pp, d.q[0], -1, nl);
    gb.op(s, p0, d.q[1], -1, nl);
    gb.op(s, pp, d.q[2], -1, nl);
    gb.op(s, p0, d.q[3], -1, nl);
    cx(s + 1, d.q[0], d.q[1]);
    cx(s + 1, d.q[2], d.q[3]);
    // check pair (1,2) on a0/a1, check pair (0,3) on a2/a3; the two copies of
    // each check run in the same two layers with their data couplings swapped,
    // so the data block is busy every layer and free right after s+3
    gb.op(s + 1, p0, a0, -1, nl);
    gb.op(s + 1, p0, a1, -1, nl);
    gb.op(s + 1, p0, a2, -1, nl);
    gb.op(s + 1, p0, a3, -1, nl);
    cx(s + 2, d.q[1], a0);
    cx(s + 2, d.q[2], a1);
    cx(s + 2, d.q[0], a2);
    cx(s + 2, d.q[3], a3);
    cx(s + 3, d.q[2], a0);
    cx(s + 3, d.q[1], a1);
    cx(s + 3, d.q[3], a2);
    cx(s + 3, d.q[0], a3);
    int i1 = gb.add_meas(s + 4, mk, a0, nl);
    int i2 = gb.add_meas(s + 4, mk, a1, nl);
    int i3 = gb.add_meas(s + 4, mk, a2, nl);
    int i4 = gb.add_meas(s + 4, mk, a3, nl);
    gb.corr(s + 4, ck, d.q[2], {i1});
    gb.corr(s + 4, ck, d.q[3], {i1});
    GadgetBuilder::Prep out;
    out.block = d;
    out.flags = {VerFlag{{i1, i2, i3, i4}}};
    // the trailing ancilla measurements only feed the classical flag
    out.end = s + 4;
    return out;
}

// Single-ancilla verified preparation for the 7-qubit code: scheduled encoder
// plus one ancilla reading a logical parity.  The representative {1,4,6} is
// matched to this encoder's fault propagation: exhaustive injection shows it
// anticommutes with every multi-qubit residual a single fault can leave, which
// the {0,1,2} representative does not.
static GadgetBuilder::Prep prep_logical_check(GadgetBuilder& gb, char basis, int s,
                                              bool nl) {
    GadgetBuilder::Prep out;
    out.block = gb.new_block();
    std::vector<int> free_at;
    place_encoder(gb, gb.code(), basis, out.block, s, nl, &free_at);
    int v = gb.new_qubit();
    bool dual = basis == 'X';
    // couple the check qubit in as soon as each representative qubit leaves
    // the encoder, earliest first, instead of waiting for the whole encoder
    std::vector<int> reps = {1, 4, 6};
    std::sort(reps.begin(), reps.end(),
              [&](int a, int b) { return free_at[a] < free_at[b]; });
    int v_free = -1, end = 0;
    for (int q : reps) {
        int t = std::max(free_at[q], v_free);
        if (v_free < 0) gb.op(t - 1, dual ? LocKind::PrepX : LocKind::PrepZ, v, -1, nl);
        int c = dual ? v : out.block.q[q];
        int tg = dual ? out.block.q[q] : v;
        gb.op(t, LocKind::Cnot, c, tg, nl);
        v_free = t + 1;
        free_at[q] = t + 1;
        end = std::max(end, t + 1);
    }
    int m = gb.add_meas(v_free, dual ? LocKind::MeasX : LocKind::MeasZ, v, nl);
    out.flags = {VerFlag{{m}}};
    for (int f : free_at) end = std::max(end, f);
    out.end = end;
    return out;
}

// copy verification: encode the block and a second copy in parallel, couple
// them transversally, measure the copy, and check every stabilizer and
// logical parity of the outcomes; `flag_sets` overrides the parity list
static GadgetBuilder::Prep prep_copy(
    GadgetBuilder& gb, char basis, int s, bool nl,
    const std::vector<std::vector<int>>* flag_sets = nullptr) {
    const CssCode& c = gb.code();
    GadgetBuilder::Prep out;
    out.block = gb.new_block();
    Block copy = gb.new_block();
    std::vector<int> f1, f2;
    place_encoder(gb, c, basis, out.block, s, nl, &f1);
    place_encoder(gb, c, basis, copy, s, nl, &f2);
    bool dual = basis == 'X';
    std::vector<int32_t> m(c.n);
    int end = 0;
    for (int i = 0; i < c.n; i++) {
        // X faults flow control->target, Z faults target->control: couple so
        // the block's errors of the dangerous type land on the measured copy;
        // each qubit is coupled and read out as soon as both encoders release it
        int t = std::max(f1[i], f2[i]);
        int cq = dual ? copy.q[i] : out.block.q[i];
        int tq = dual ? out.block.q[i] : copy.q[i];
        gb.op(t, LocKind::Cnot, cq, tq, nl);
        m[i] = gb.add_meas(t + 1, dual ? LocKind::MeasX : LocKind::MeasZ, copy.q[i], nl);
        end = std::max(end, t + 1);
    }
    std::vector<std::vector<int>> sets;
    if (flag_sets) {
        sets = *flag_sets;
    } else {
        const auto& checks = dual ? c.x_stabs : c.z_stabs;
        const auto& logs = dual ? c.logical_x : c.logical_z;
        sets.insert(sets.end(), checks.begin(), checks.end());
        sets.insert(sets.end(), logs.begin(), logs.end());
    }
    for (const auto& sup : sets) {
        VerFlag f;
        for (int q : sup) f.meas.push_back(m[q]);
        out.flags.push_back(std::move(f));
    }
    out.end = end;
    return out;
}

GadgetBuilder::Prep GadgetBuilder::prep_verified(char basis, int start, bool noiseless) {
    assert(basis == 'Z' || basis == 'X');
    if (code_->name == "c4") return prep_c4(*this, basis, start, noiseless);
    if (code_->name == "steane") return prep_logical_check(*this, basis, start, noiseless);
    return prep_copy(*this, basis, start, noiseless);
}

GadgetBuilder::Prep GadgetBuilder::prep_steane_conventional(char basis, int start,
                                                            bool noiseless) {
    assert(code_->name == "steane");
    // the classic three-parity variant: two stabilizer checks plus the logical
    std::vector<std::vector<int>> sets = {{0, 2, 4, 6}, {1, 2, 5, 6}, {0, 1, 2}};
    return prep_copy(*this, basis, start, noiseless, &sets);
}

GadgetBuilder::Bell GadgetBuilder::bell_pair(int start, bool noiseless) {
    Bell out;
    if (noiseless) {
        int e1 = 0, e2 = 0;
        out.zero_side = prep_unverified('Z', start, true, &e1);
        out.plus_side = prep_unverified('X', start, true, &e2);
        out.end = transversal_cnot(out.plus_side, out.zero_side, std::max(e1, e2), true);
    } else {
        Prep pz = prep_verified('Z', start, noiseless);
        Prep px = prep_verified('X', start, noiseless);
        out.zero_side = pz.block;
        out.plus_side = px.block;
        out.instances = {pz.flags, px.flags};
        int M = std::max(pz.end, px.end);
        out.end = transversal_cnot(px.block, pz.block, M, false);
        if (code_->distance <= 2) attach_detection(out, pz.end - start, px.end - start, M);
    }
    return out;
}

// Detection stage for distance-2 pairs: both raw halves are teleported through
// two fresh raw pairs and the four measured blocks are checked.  Any stabilizer
// syndrome in the outcomes marks the attempt discarded; with quiet syndromes
// the decoded logical classes are deterministic teleportation byproducts that
// the estimator folds into its frame beliefs.  Faults inside the raw pair are
// copied onto a measured block before they can reach the delivered halves, so
// almost the whole raw-pair fault mass turns into discards; only the delivered
// halves' own late errors survive to the next decode.
void GadgetBuilder::attach_detection(Bell& out, int dz, int dx, int M) {
    // fresh preps are scheduled backwards so each block is released exactly at
    // its coupling layer; couplings onto the same target commute, so the fresh
    // pair's internal CNOT can come after the teleport coupling, which lets the
    // delivered halves stay busy until one layer before they are handed off
    Prep z1 = prep_verified('Z', M + 1 - dz, false);
    Prep z2 = prep_verified('Z', M + 1 - dz, false);
    Prep x1 = prep_verified('X', M + 2 - dx, false);
    Prep x2 = prep_verified('X', M + 2 - dx, false);
    transversal_cnot(out.zero_side, z1.block, M + 1, false);
    transversal_cnot(out.plus_side, z2.block, M + 1, false);
    Meas ma = measure_block(out.zero_side, 'X', M + 2, false);
    Meas mb = measure_block(out.plus_side, 'X', M + 2, false);
    transversal_cnot(x1.block, z1.block, M + 2, false);
    transversal_cnot(x2.block, z2.block, M + 2, false);
    Meas mc = measure_block(z1.block, 'Z', M + 3, false);
    Meas md = measure_block(z2.block, 'Z', M + 3, false);

    std::vector<VerFlag> det;
    auto syndromes = [&](const std::vector<int32_t>& m,
                         const std::vector<std::vector<int>>& stabs) {
        for (const auto& sup : stabs) {
            VerFlag f;
            for (int q : sup) f.meas.push_back(m[q]);
            det.push_back(std::move(f));
        }
    };
    syndromes(ma.m, code_->x_stabs);
    syndromes(mb.m, code_->x_stabs);
    syndromes(mc.m, code_->z_stabs);
    syndromes(md.m, code_->z_stabs);
    out.instances.push_back(z1.flags);
    out.instances.push_back(z2.flags);
    out.instances.push_back(x1.flags);
    out.instances.push_back(x2.flags);
    out.instances.push_back(std::move(det));
    out.det_mx = {ma.m, mb.m};
    out.det_mz = {mc.m, md.m};
    out.zero_side = x1.block;
    out.plus_side = x2.block;
    out.end = M + 3;
}

int GadgetBuilder::transversal_cnot(const Block& ctrl, const Block& tgt, int layer,
                                    bool noiseless) {
    assert(ctrl.q.size() == tgt.q.size());
    for (size_t i = 0; i < ctrl.q.size(); i++)
        op(layer, LocKind::Cnot, ctrl.q[i], tgt.q[i], noiseless);
    return layer + 1;
}

GadgetBuilder::Meas GadgetBuilder::measure_block(const Block& b, char basis, int layer,
                                                 bool noiseless) {
    Meas out;
    for (int q : b.q)
        out.m.push_back(
            add_meas(layer, basis == 'Z' ? LocKind::MeasZ : LocKind::MeasX, q, noiseless));
    out.end = layer + 1;
    return out;
}

GadgetBuilder::Ec GadgetBuilder::knill_ec(const Block& data, int start, bool noiseless) {
    Bell bell = bell_pair(start, noiseless);
    int t = transversal_cnot(data, bell.zero_side, bell.end, noiseless);
    Meas mx = measure_block(data, 'X', t, noiseless);
    Meas mz = measure_block(bell.zero_side, 'Z', t, noiseless);
    Ec ec;
    ec.out = bell.plus_side;
    ec.mx_data = mx.m;
    ec.mz_anc = mz.m;
    ec.det_mx = std::move(bell.det_mx);
    ec.det_mz = std::move(bell.det_mz);
    ec.instances = std::move(bell.instances);
    ec.end = std::max(mx.end, mz.end);
    return ec;
}

int GadgetBuilder::bell_depth() {
    if (bell_depth_ < 0) {
        GadgetBuilder probe(*code_);
        Bell b = probe.bell_pair(0, false);
        bell_depth_ = b.end;
    }
    return bell_depth_;
}

Circuit GadgetBuilder::finalize(IdlePolicy policy) {
    Circuit out;
    out.n_qubits = n_qubits_;
    out.n_meas = n_meas_;
    std::vector<int> born(n_qubits_, INT_MAX), dead(n_qubits_, -1);
    for (int t = 0; t < (int)layers_.size(); t++)
        for (const Location& l : layers_[t]) {
            if (!l.ctrl.empty()) continue;  // corrections are instantaneous
            for (int q : {(int)l.a, (int)l.b}) {
                if (q < 0) continue;
                born[q] = std::min(born[q], t);
                dead[q] = std::max(dead[q], t);
            }
        }
    for (int t = 0; t < (int)layers_.size(); t++) {
        if (layers_[t].empty()) continue;
        bool layer_noiseless = true;
        std::vector<uint8_t> used(n_qubits_, 0);
        for (const Location& l : layers_[t]) {
            layer_noiseless &= l.noiseless;
            if (l.ctrl.empty()) {
                used[l.a] = 1;
                if (l.b >= 0) used[l.b] = 1;
            }
            out.locs.push_back(l);
        }
        if (policy == IdlePolicy::lockstep)
            for (int q = 0; q < n_qubits_; q++)
                if (!used[q] && !protected_[q] && born[q] < t && t < dead[q])
                    out.add(LocKind::GateI, q, -1, layer_noiseless);
    }
    return out;
}

BenchmarkProgram build_cnot_benchmark(const CssCode& code, int rounds,
                                      BenchVariant variant, IdlePolicy idle) {
    assert(rounds >= 1);
    if (variant == BenchVariant::single_round) rounds = 1;
    BenchmarkProgram bp;
    bp.code = code;
    bp.rounds = rounds;
    bp.divisor = variant == BenchVariant::full ? rounds : 1;
    // After an odd number of logical CNOTs the two Bell pairs' final parities
    // are correlated across pairs rather than individually deterministic (the
    // CNOT entangles the pairs' gauge), so odd-round runs are closed with one
    // error-free logical CNOT to restore product form.
    bp.trailing_noiseless_cnot = variant == BenchVariant::single_round || rounds % 2 == 1;

    GadgetBuilder gb(code);
    int noisy_bell = gb.bell_depth();
    int free_bell;
    {
        GadgetBuilder probe(code);
        free_bell = probe.bell_pair(0, true).end;
    }
    // pipeline: the logical step of round r sits at layer T, its replacement
    // Bell pairs are scheduled backwards so teleportation lands at T+1 with
    // zero waiting on the data blocks
    int T = std::max(noisy_bell - 1, free_bell);

    GadgetBuilder::Bell init_c = gb.bell_pair(T - free_bell, true);
    GadgetBuilder::Bell init_t = gb.bell_pair(T - free_bell, true);
    // the whole initial section is error-free: its layers overlap the first
    // noisy Bell preparations, so these qubits must never pick up noisy idles
    gb.protect_block(init_c.plus_side);
    gb.protect_block(init_t.plus_side);
    gb.protect_block(init_c.zero_side);
    gb.protect_block(init_t.zero_side);
    Block rc = init_c.plus_side, rt = init_t.plus_side;
    Block dc = init_c.zero_side, dt = init_t.zero_side;

    for (int r = 0; r < rounds; r++) {
        gb.transversal_cnot(dc, dt, T, false);
        GadgetBuilder::Ec ec_c = gb.knill_ec(dc, T + 1 - noisy_bell, false);
        GadgetBuilder::Ec ec_t = gb.knill_ec(dt, T + 1 - noisy_bell, false);
        assert(ec_c.end == T + 3 && ec_t.end == T + 3);
        bp.round_ecs.push_back(
            {BenchmarkProgram::EcMeta{ec_c.mx_data, ec_c.mz_anc, ec_c.det_mx, ec_c.det_mz},
             BenchmarkProgram::EcMeta{ec_t.mx_data, ec_t.mz_anc, ec_t.det_mx, ec_t.det_mz}});
        for (auto& inst : ec_c.instances) bp.ver_instances.push_back(std::move(inst));
        for (auto& inst : ec_t.instances) bp.ver_instances.push_back(std::move(inst));
        dc = ec_c.out;
        dt = ec_t.out;
        // the next round's logical step shares a layer with this round's
        // readout: the measured blocks and the fresh blocks are disjoint
        T += 2;
    }
    if (bp.trailing_noiseless_cnot) T = gb.transversal_cnot(dc, dt, T, true);

    gb.transversal_cnot(rc, dc, T, true);
    gb.transversal_cnot(rt, dt, T, true);
    bp.final_mx_ref[0] = gb.measure_block(rc, 'X', T + 1, true).m;
    bp.final_mx_ref[1] = gb.measure_block(rt, 'X', T + 1, true).m;
    bp.final_mz_data[0] = gb.measure_block(dc, 'Z', T + 1, true).m;
    bp.final_mz_data[1] = gb.measure_block(dt, 'Z', T + 1, true).m;
    bp.circuit = gb.finalize(idle);
    return bp;
}

}  // namespace ftlab
