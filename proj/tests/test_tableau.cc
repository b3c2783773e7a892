#include "ftlab/tableau.hh"

#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "ftlab/rng.hh"

using namespace ftlab;
using cd = std::complex<double>;

namespace {

// Dense statevector oracle, fine for <= 8 qubits.  Qubit q toggles bit q of
// the basis-state index.
struct StateVec {
    int n;
    std::vector<cd> amp;

    explicit StateVec(int n_qubits) : n(n_qubits), amp((size_t)1 << n_qubits, 0) {
        amp[0] = 1;
    }
    void h(int q) {
        size_t m = (size_t)1 << q;
        double s = 1.0 / std::sqrt(2.0);
        for (size_t i = 0; i < amp.size(); i++)
            if (!(i & m)) {
                cd a = amp[i], b = amp[i | m];
                amp[i] = s * (a + b);
                amp[i | m] = s * (a - b);
            }
    }
    void sgate(int q) {
        size_t m = (size_t)1 << q;
        for (size_t i = 0; i < amp.size(); i++)
            if (i & m) amp[i] *= cd(0, 1);
    }
    void cnot(int c, int t) {
        size_t mc = (size_t)1 << c, mt = (size_t)1 << t;
        for (size_t i = 0; i < amp.size(); i++)
            if ((i & mc) && !(i & mt)) std::swap(amp[i], amp[i | mt]);
    }
    void x(int q) {
        size_t m = (size_t)1 << q;
        for (size_t i = 0; i < amp.size(); i++)
            if (!(i & m)) std::swap(amp[i], amp[i | m]);
    }
    void z(int q) {
        size_t m = (size_t)1 << q;
        for (size_t i = 0; i < amp.size(); i++)
            if (i & m) amp[i] = -amp[i];
    }
    double prob1(int q) const {
        size_t m = (size_t)1 << q;
        double p = 0;
        for (size_t i = 0; i < amp.size(); i++)
            if (i & m) p += std::norm(amp[i]);
        return p;
    }
    void project(int q, int bit) {
        size_t m = (size_t)1 << q;
        double p = 0;
        for (size_t i = 0; i < amp.size(); i++) {
            if (((i & m) != 0) != (bit != 0))
                amp[i] = 0;
            else
                p += std::norm(amp[i]);
        }
        REQUIRE(p > 1e-12);
        double s = 1.0 / std::sqrt(p);
        for (auto& a : amp) a *= s;
    }
    // Is P|psi> = sign |psi>?
    bool eigen(const Pauli& p, int sign) const {
        StateVec o = *this;
        for (int q = 0; q < n; q++) {
            if (p.x[q] && p.z[q]) {  // canonical Y = iXZ
                o.z(q);
                o.x(q);
                for (auto& a : o.amp) a *= cd(0, 1);
            } else if (p.x[q]) {
                o.x(q);
            } else if (p.z[q]) {
                o.z(q);
            }
        }
        cd ph = std::pow(cd(0, 1), p.phase);
        for (size_t i = 0; i < amp.size(); i++)
            if (std::abs(ph * o.amp[i] - (double)sign * amp[i]) > 1e-9) return false;
        return true;
    }
};

Pauli stab_row(const Tableau& t, int i) {
    Pauli p(t.n);
    for (int q = 0; q < t.n; q++) {
        p.x[q] = t.get(t.xs, t.n + i, q);
        p.z[q] = t.get(t.zs, t.n + i, q);
    }
    p.phase = (uint8_t)(2 * t.r[t.n + i]);
    return p;
}

}  // namespace

TEST_CASE("random circuits: tableau measurements agree with statevector oracle") {
    const int n = 4;
    Rng gen(12345);
    for (int trial = 0; trial < 60; trial++) {
        Tableau t(n);
        StateVec sv(n);
        Rng rng(777 + trial);
        for (int step = 0; step < 50; step++) {
            int op = (int)gen.below(6);
            int q = (int)gen.below(n);
            switch (op) {
                case 0: t.h(q); sv.h(q); break;
                case 1: t.s(q); sv.sgate(q); break;
                case 2: {
                    int q2 = (int)gen.below(n);
                    if (q2 == q) q2 = (q + 1) % n;
                    t.cnot(q, q2);
                    sv.cnot(q, q2);
                    break;
                }
                case 3: t.px(q); sv.x(q); break;
                case 4: t.pz(q); sv.z(q); break;
                case 5: {
                    bool det = false;
                    int o = t.measure_z(q, rng, &det);
                    double p1 = sv.prob1(q);
                    bool sv_det = p1 < 0.25 || p1 > 0.75;
                    CHECK(det == sv_det);
                    if (sv_det) CHECK(o == (p1 > 0.5 ? 1 : 0));
                    sv.project(q, o);
                    break;
                }
            }
        }
        // every stabilizer row must stabilize the statevector with its sign
        for (int i = 0; i < n; i++) {
            Pauli row = stab_row(t, i);
            Pauli bare = row;
            bare.phase = 0;
            CHECK(sv.eigen(bare, t.r[t.n + i] ? -1 : 1));
        }
        // and stabilizes() must agree with itself on the rows
        for (int i = 0; i < n; i++) {
            Pauli bare = stab_row(t, i);
            bare.phase = 0;
            int sign = 0;
            CHECK(t.stabilizes(bare, &sign));
            CHECK(sign == (t.r[t.n + i] ? -1 : 1));
        }
    }
}

TEST_CASE("random measurement outcomes are unbiased") {
    int ones = 0;
    for (int s = 0; s < 2000; s++) {
        Tableau t(1);
        Rng rng(1000 + s);
        t.h(0);
        ones += t.measure_z(0, rng);
    }
    CHECK(ones > 870);
    CHECK(ones < 1130);
}

TEST_CASE("tableau_run: GHZ with classically controlled fixup leaves |00>") {
    Circuit c;
    c.add(LocKind::PrepZ, 0);
    c.add(LocKind::PrepZ, 1);
    c.add(LocKind::PrepZ, 2);
    c.add(LocKind::GateH, 0);
    c.add(LocKind::Cnot, 0, 1);
    c.add(LocKind::Cnot, 0, 2);
    int m = c.add(LocKind::MeasZ, 2);
    int midx = c.locs[m].meas_index;
    c.add_correction(LocKind::GateX, 0, {midx});
    c.add_correction(LocKind::GateX, 1, {midx});
    int saw1 = 0;
    for (uint64_t seed = 0; seed < 24; seed++) {
        Tableau fin(3);
        ShotRecord rec = tableau_run(c, {}, seed, &fin);
        saw1 += rec.bits[0];
        // measuring q2 collapses the GHZ; the conditional X's make q0 q1 |00>
        int sign = 0;
        CHECK(fin.stabilizes(Pauli::from_string("ZII"), &sign));
        CHECK(sign == 1);
        CHECK(fin.stabilizes(Pauli::from_string("IZI"), &sign));
        CHECK(sign == 1);
        CHECK(!fin.stabilizes(Pauli::from_string("XXI")));
    }
    CHECK(saw1 > 0);
    CHECK(saw1 < 24);
}

TEST_CASE("tableau_run: injected faults flip outcomes as expected") {
    // prep0 -> X fault -> meas_Z gives 1; CNOT propagates X from control
    Circuit c;
    c.add(LocKind::PrepZ, 0);
    c.add(LocKind::PrepZ, 1);
    c.add(LocKind::Cnot, 0, 1);
    c.add(LocKind::MeasZ, 0);
    c.add(LocKind::MeasZ, 1);
    FaultMap f;
    f[0] = SitePauli{1, 0, 0, 0};  // X after prep of qubit 0
    ShotRecord rec = tableau_run(c, f, 99);
    CHECK(rec.bits[0] == 1);
    CHECK(rec.bits[1] == 1);
    // fault after the CNOT touches only the target
    FaultMap g;
    g[2] = SitePauli{0, 0, 1, 0};
    rec = tableau_run(c, g, 99);
    CHECK(rec.bits[0] == 0);
    CHECK(rec.bits[1] == 1);
}

TEST_CASE("deterministic stabilizer measurement across 150 qubits") {
    // long-range GHZ: all-zero Z measurements and even X-parity structure
    int n = 150;
    Tableau t(n);
    Rng rng(5);
    t.h(0);
    for (int q = 1; q < n; q++) t.cnot(q - 1, q);
    bool det = false;
    int m0 = t.measure_z(0, rng, &det);
    CHECK(!det);
    for (int q = 1; q < n; q++) {
        int mq = t.measure_z(q, rng, &det);
        CHECK(det);
        CHECK(mq == m0);
    }
}
