#include "ftlab/circuit.hh"

#include <sstream>

namespace ftlab {

const char* loc_kind_name(LocKind k) {
    switch (k) {
        case LocKind::PrepZ: return "prep_0";
        case LocKind::PrepX: return "prep_plus";
        case LocKind::GateI: return "I";
        case LocKind::GateX: return "X";
        case LocKind::GateY: return "Y";
        case LocKind::GateZ: return "Z";
        case LocKind::GateH: return "H";
        case LocKind::GateS: return "S";
        case LocKind::Cnot: return "CNOT";
        case LocKind::MeasZ: return "meas_Z";
        case LocKind::MeasX: return "meas_X";
    }
    return "?";
}

bool is_unitary(LocKind k) {
    return k >= LocKind::GateI && k <= LocKind::Cnot;
}

bool is_measurement(LocKind k) { return k == LocKind::MeasZ || k == LocKind::MeasX; }

bool is_prep(LocKind k) { return k == LocKind::PrepZ || k == LocKind::PrepX; }

bool is_pauli_gate(LocKind k) {
    return k == LocKind::GateX || k == LocKind::GateY || k == LocKind::GateZ;
}

void Circuit::append(const Circuit& other) {
    // Qubit indices must already be global; measurement-record references are
    // shifted past this circuit's existing record.
    int32_t off = n_meas;
    for (Location l : other.locs) {
        for (int32_t& m : l.ctrl) m += off;
        add(std::move(l));  // add() re-derives meas_index (= old + off)
    }
}

std::string Circuit::dump() const {
    std::ostringstream os;
    for (size_t i = 0; i < locs.size(); i++) {
        const Location& l = locs[i];
        os << i << "\t" << loc_kind_name(l.kind) << " " << l.a;
        if (l.kind == LocKind::Cnot) os << " " << l.b;
        if (!l.ctrl.empty()) {
            os << "\tif";
            for (int32_t m : l.ctrl) os << " m" << m;
        }
        if (l.meas_index >= 0) os << "\t-> m" << l.meas_index;
        if (l.noiseless) os << "\t[noiseless]";
        os << "\n";
    }
    return os.str();
}

}  // namespace ftlab
