#ifndef FTLAB_CIRCUIT_HH
#define FTLAB_CIRCUIT_HH

#include <cstdint>
#include <string>
#include <vector>

#include "ftlab/pauli.hh"

namespace ftlab {

enum class LocKind : uint8_t {
    PrepZ,     // |0>
    PrepX,     // |+>
    GateI,
    GateX,
    GateY,
    GateZ,
    GateH,
    GateS,
    Cnot,
    MeasZ,
    MeasX,
};

const char* loc_kind_name(LocKind k);
bool is_unitary(LocKind k);
bool is_measurement(LocKind k);
bool is_prep(LocKind k);
bool is_pauli_gate(LocKind k);

// One location.  A location is also a fault site: its id is its index in the
// circuit's location list.  `ctrl` (optional) is a parity expression over
// earlier measurement-record indices; only Pauli gates may carry one, and a
// classically controlled Pauli is a frame correction executed without noise.
struct Location {
    LocKind kind;
    int32_t a = -1;          // qubit (or control qubit for Cnot)
    int32_t b = -1;          // target qubit for Cnot
    std::vector<int32_t> ctrl;
    bool noiseless = false;  // p=0 overlay ("error-free" sections) or classical correction
    int32_t meas_index = -1; // filled by Circuit::add for measurements

    int n_targets() const { return kind == LocKind::Cnot ? 2 : 1; }
};

struct Circuit {
    int n_qubits = 0;
    int n_meas = 0;
    std::vector<Location> locs;

    int add(Location loc) {
        if (loc.a >= n_qubits) n_qubits = loc.a + 1;
        if (loc.b >= n_qubits) n_qubits = loc.b + 1;
        if (is_measurement(loc.kind)) loc.meas_index = n_meas++;
        locs.push_back(std::move(loc));
        return (int)locs.size() - 1;
    }

    int add(LocKind k, int a, int b = -1, bool noiseless = false) {
        Location l;
        l.kind = k;
        l.a = a;
        l.b = b;
        l.noiseless = noiseless;
        return add(std::move(l));
    }

    // classically controlled Pauli correction (always noiseless)
    int add_correction(LocKind pauli, int q, std::vector<int32_t> ctrl) {
        Location l;
        l.kind = pauli;
        l.a = q;
        l.ctrl = std::move(ctrl);
        l.noiseless = true;
        return add(std::move(l));
    }

    void append(const Circuit& other);  // qubit/measurement indices must already be global

    std::string dump() const;  // one location per line, documented in README
};

// Measurement bits of one shot, in record order.
struct ShotRecord {
    std::vector<uint8_t> bits;

    int parity(const std::vector<int32_t>& idx) const {
        int acc = 0;
        for (int32_t i : idx) acc ^= bits[i];
        return acc;
    }
};

}  // namespace ftlab

#endif
