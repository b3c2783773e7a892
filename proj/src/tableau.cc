#include "ftlab/tableau.hh"

#include <bit>
#include <cassert>
#include <stdexcept>

namespace ftlab {

Tableau::Tableau(int n_qubits) : n(n_qubits), words((n_qubits + 63) / 64) {
    xs.assign((size_t)2 * n * words, 0);
    zs.assign((size_t)2 * n * words, 0);
    r.assign(2 * n, 0);
    // destabilizer i = X_i, stabilizer n+i = Z_i  (state |0...0>)
    for (int i = 0; i < n; i++) {
        toggle(xs, i, i);
        toggle(zs, n + i, i);
    }
}

void Tableau::h(int q) {
    int w = q >> 6;
    uint64_t m = 1ULL << (q & 63);
    for (int i = 0; i < 2 * n; i++) {
        uint64_t& x = xs[(size_t)i * words + w];
        uint64_t& z = zs[(size_t)i * words + w];
        r[i] ^= ((x & z & m) != 0);
        uint64_t t = (x ^ z) & m;
        x ^= t;
        z ^= t;
    }
}

void Tableau::s(int q) {
    int w = q >> 6;
    uint64_t m = 1ULL << (q & 63);
    for (int i = 0; i < 2 * n; i++) {
        uint64_t& x = xs[(size_t)i * words + w];
        uint64_t& z = zs[(size_t)i * words + w];
        r[i] ^= ((x & z & m) != 0);
        z ^= x & m;
    }
}

void Tableau::cnot(int c, int t) {
    int wc = c >> 6, wt = t >> 6;
    uint64_t mc = 1ULL << (c & 63), mt = 1ULL << (t & 63);
    for (int i = 0; i < 2 * n; i++) {
        uint64_t* x = &xs[(size_t)i * words];
        uint64_t* z = &zs[(size_t)i * words];
        int xc = (x[wc] & mc) != 0, zc = (z[wc] & mc) != 0;
        int xt = (x[wt] & mt) != 0, zt = (z[wt] & mt) != 0;
        r[i] ^= xc & zt & (xt ^ zc ^ 1);
        if (xc) x[wt] ^= mt;
        if (zt) z[wc] ^= mc;
    }
}

void Tableau::px(int q) {
    // X flips the sign of rows anticommuting with X at q, i.e. rows with z=1.
    for (int i = 0; i < 2 * n; i++) r[i] ^= get(zs, i, q);
}

void Tableau::pz(int q) {
    for (int i = 0; i < 2 * n; i++) r[i] ^= get(xs, i, q);
}

// phase exponent sum (mod 4) of the per-qubit g function, word-parallel.
static int g_sum(const uint64_t* x1, const uint64_t* z1, const uint64_t* x2,
                 const uint64_t* z2, int words) {
    long plus = 0, minus = 0;
    for (int w = 0; w < words; w++) {
        uint64_t a = x1[w], b = z1[w], c = x2[w], d = z2[w];
        // +1: Y*"Z-only", X*Y, Z*"X-only";  -1: Y*"X-only", X*"Z-only", Z*Y
        uint64_t p = (a & b & ~c & d) | (a & ~b & c & d) | (~a & b & c & ~d);
        uint64_t m = (a & b & c & ~d) | (a & ~b & ~c & d) | (~a & b & c & d);
        plus += std::popcount(p);
        minus += std::popcount(m);
    }
    return (int)(((plus - minus) % 4 + 4) % 4);
}

void Tableau::rowsum(int h_row, int i_row) {
    uint64_t* xh = &xs[(size_t)h_row * words];
    uint64_t* zh = &zs[(size_t)h_row * words];
    const uint64_t* xi = &xs[(size_t)i_row * words];
    const uint64_t* zi = &zs[(size_t)i_row * words];
    int ph = (2 * r[h_row] + 2 * r[i_row] + g_sum(xi, zi, xh, zh, words)) & 3;
    // Destabilizer rows can anticommute with the summand; their phases are
    // never read, so an odd total there is fine.  Stabilizer rows stay even.
    assert(h_row < n || (ph & 1) == 0);
    r[h_row] = (uint8_t)(ph >> 1);
    for (int w = 0; w < words; w++) {
        xh[w] ^= xi[w];
        zh[w] ^= zi[w];
    }
}

void Tableau::rowsum_scratch(std::vector<uint64_t>& sx, std::vector<uint64_t>& sz,
                             int& sr2, int i_row) const {
    const uint64_t* xi = &xs[(size_t)i_row * words];
    const uint64_t* zi = &zs[(size_t)i_row * words];
    sr2 = (sr2 + 2 * r[i_row] + g_sum(xi, zi, sx.data(), sz.data(), words)) & 3;
    for (int w = 0; w < words; w++) {
        sx[w] ^= xi[w];
        sz[w] ^= zi[w];
    }
}

int Tableau::measure_z(int q, Rng& rng, bool* was_deterministic) {
    int p = -1;
    for (int i = n; i < 2 * n; i++)
        if (get(xs, i, q)) { p = i; break; }
    if (p >= 0) {
        // random outcome
        if (was_deterministic) *was_deterministic = false;
        for (int i = 0; i < 2 * n; i++)
            if (i != p && get(xs, i, q)) rowsum(i, p);
        // destabilizer slot gets the old stabilizer row
        size_t dst = (size_t)(p - n) * words, src = (size_t)p * words;
        for (int w = 0; w < words; w++) {
            xs[dst + w] = xs[src + w];
            zs[dst + w] = zs[src + w];
            xs[src + w] = 0;
            zs[src + w] = 0;
        }
        r[p - n] = r[p];
        int o = rng.bit();
        toggle(zs, p, q);
        r[p] = (uint8_t)o;
        return o;
    }
    // deterministic: accumulate stabilizer rows indicated by destabilizers
    if (was_deterministic) *was_deterministic = true;
    std::vector<uint64_t> sx(words, 0), sz(words, 0);
    int sr2 = 0;
    for (int i = 0; i < n; i++)
        if (get(xs, i, q)) rowsum_scratch(sx, sz, sr2, i + n);
    assert((sr2 & 1) == 0);
    return (sr2 >> 1) & 1;
}

int Tableau::measure_x(int q, Rng& rng, bool* was_deterministic) {
    h(q);
    int o = measure_z(q, rng, was_deterministic);
    h(q);
    return o;
}

void Tableau::reset_z(int q, Rng& rng) {
    if (measure_z(q, rng)) px(q);
}

void Tableau::reset_x(int q, Rng& rng) {
    if (measure_x(q, rng)) pz(q);
}

bool Tableau::stabilizes(const Pauli& p, int* sign_out) const {
    assert(p.n == n);
    // Express p over the stabilizer generators: destabilizer d_i anticommutes
    // only with stabilizer s_i, so s_i appears iff p anticommutes with d_i.
    std::vector<uint64_t> sx(words, 0), sz(words, 0);
    int sr2 = 0;
    for (int i = 0; i < n; i++) {
        int anti = 0;
        for (int q = 0; q < n; q++)
            anti ^= (get(xs, i, q) & p.z[q]) ^ (get(zs, i, q) & p.x[q]);
        if (anti) rowsum_scratch(sx, sz, sr2, i + n);
    }
    for (int q = 0; q < n; q++) {
        if (((sx[q >> 6] >> (q & 63)) & 1) != p.x[q]) return false;
        if (((sz[q >> 6] >> (q & 63)) & 1) != p.z[q]) return false;
    }
    // Letters match; compare signs.  rowsum tracks the sign of the canonical
    // Hermitian letters, the same encoding Pauli uses (phase 0 with x=z=1 is +Y).
    if (p.phase & 1) return false;  // anti-Hermitian input can't stabilize
    int sign = ((sr2 >> 1) & 1) ? -1 : 1;
    if (p.phase == 2) sign = -sign;  // report the sign relative to p as given
    if (sign_out) *sign_out = sign;
    return true;
}

ShotRecord tableau_run(const Circuit& c, const FaultMap& faults, uint64_t seed,
                       Tableau* final_state) {
    Tableau t(c.n_qubits);
    Rng rng(seed);
    ShotRecord rec;
    rec.bits.assign(c.n_meas, 0);
    auto apply_site = [&](const SitePauli& f, int a, int b) {
        if (f.xa) t.px(a);
        if (f.za) t.pz(a);
        if (b >= 0) {
            if (f.xb) t.px(b);
            if (f.zb) t.pz(b);
        }
    };
    for (size_t i = 0; i < c.locs.size(); i++) {
        const Location& l = c.locs[i];
        auto fit = faults.find((int)i);
        const SitePauli* f = fit == faults.end() ? nullptr : &fit->second;
        if (is_measurement(l.kind) && f) apply_site(*f, l.a, -1);
        switch (l.kind) {
            case LocKind::PrepZ: t.reset_z(l.a, rng); break;
            case LocKind::PrepX: t.reset_x(l.a, rng); break;
            case LocKind::GateI: break;
            case LocKind::GateX:
            case LocKind::GateY:
            case LocKind::GateZ: {
                if (!l.ctrl.empty() && !rec.parity(l.ctrl)) break;
                if (l.kind != LocKind::GateZ) t.px(l.a);
                if (l.kind != LocKind::GateX) t.pz(l.a);
                break;
            }
            case LocKind::GateH: t.h(l.a); break;
            case LocKind::GateS: t.s(l.a); break;
            case LocKind::Cnot: t.cnot(l.a, l.b); break;
            case LocKind::MeasZ: rec.bits[l.meas_index] = (uint8_t)t.measure_z(l.a, rng); break;
            case LocKind::MeasX: rec.bits[l.meas_index] = (uint8_t)t.measure_x(l.a, rng); break;
        }
        if (!is_measurement(l.kind) && f) apply_site(*f, l.a, l.b);
    }
    if (final_state) *final_state = t;
    return rec;
}

}  // namespace ftlab
