#ifndef FTLAB_TABLEAU_HH
#define FTLAB_TABLEAU_HH

#include <cstdint>
#include <map>
#include <vector>

#include "ftlab/circuit.hh"
#include "ftlab/pauli.hh"
#include "ftlab/rng.hh"

namespace ftlab {

// Fault Pauli local to one location's targets.
struct SitePauli {
    uint8_t xa = 0, za = 0, xb = 0, zb = 0;
    bool trivial() const { return !(xa | za | xb | zb); }
};

using FaultMap = std::map<int, SitePauli>;  // location index -> injected Pauli

// Aaronson-Gottesman stabilizer tableau with destabilizers, bit-packed rows.
// Exact sampling engine; used as the reference-sample generator for the frame
// simulator and as the oracle in tests.
struct Tableau {
    int n = 0;
    int words = 0;
    std::vector<uint64_t> xs, zs;  // (2n rows) * words; rows 0..n-1 destab, n..2n-1 stab
    std::vector<uint8_t> r;        // sign bit per row

    explicit Tableau(int n_qubits);

    bool get(const std::vector<uint64_t>& m, int row, int col) const {
        return (m[(size_t)row * words + (col >> 6)] >> (col & 63)) & 1;
    }
    void toggle(std::vector<uint64_t>& m, int row, int col) {
        m[(size_t)row * words + (col >> 6)] ^= 1ULL << (col & 63);
    }

    void h(int q);
    void s(int q);
    void cnot(int c, int t);
    void px(int q);  // Pauli gates
    void pz(int q);

    int measure_z(int q, Rng& rng, bool* was_deterministic = nullptr);
    int measure_x(int q, Rng& rng, bool* was_deterministic = nullptr);
    void reset_z(int q, Rng& rng);
    void reset_x(int q, Rng& rng);

    // Is `p` (up to sign) in the stabilizer group?  If yes, sign_out gets the
    // sign (+1/-1) with which it stabilizes the state.
    bool stabilizes(const Pauli& p, int* sign_out = nullptr) const;

  private:
    void rowsum(int h_row, int i_row);
    void rowsum_scratch(std::vector<uint64_t>& sx, std::vector<uint64_t>& sz, int& sr2,
                        int i_row) const;
};

// Runs the circuit on a fresh tableau with the given injected faults.
// Exact sample; identical (circuit, faults, seed) give identical records.
ShotRecord tableau_run(const Circuit& c, const FaultMap& faults, uint64_t seed,
                       Tableau* final_state = nullptr);

}  // namespace ftlab

#endif
