#ifndef FTLAB_PAULI_HH
#define FTLAB_PAULI_HH

#include <cstdint>
#include <string>
#include <vector>

namespace ftlab {

// n-qubit Pauli, one (x,z) bit pair per qubit plus a global phase i^phase.
// Convention fixed once for the whole project: the letter with x=1,z=1 is Y,
// stored as Y = i * X * Z  (so phase 0 with x=z=1 means +Y).  The group-action
// property test in tests/ pins this against an explicit matrix oracle.
struct Pauli {
    int n = 0;
    std::vector<uint8_t> x, z;  // one byte per qubit; 0/1
    uint8_t phase = 0;          // global factor i^phase, phase in 0..3

    Pauli() = default;
    explicit Pauli(int n_qubits) : n(n_qubits), x(n_qubits, 0), z(n_qubits, 0) {}

    // parse e.g. "+XIZY" or "-iYZ"
    static Pauli from_string(const std::string& s);
    std::string str() const;

    static Pauli single(int n_qubits, int qubit, char letter);

    char letter(int q) const {
        int v = x[q] * 2 + z[q];
        return "IZXY"[v];
    }
    void set_letter(int q, char c);

    int weight() const {
        int w = 0;
        for (int q = 0; q < n; q++) w += (x[q] | z[q]);
        return w;
    }
    bool is_identity() const { return weight() == 0; }

    bool commutes(const Pauli& o) const {
        int acc = 0;
        for (int q = 0; q < n; q++) acc ^= (x[q] & o.z[q]) ^ (z[q] & o.x[q]);
        return acc == 0;
    }

    // exact product including the i^k phase
    Pauli operator*(const Pauli& o) const;

    bool operator==(const Pauli& o) const {
        return n == o.n && x == o.x && z == o.z && phase == o.phase;
    }
    // equal up to global phase
    bool same_letters(const Pauli& o) const { return n == o.n && x == o.x && z == o.z; }
};

enum class Gate1Q : uint8_t { I, X, Y, Z, H, S };

// Heisenberg picture: returns g P g^dagger with the exact sign, for a
// single-qubit gate acting on qubit q of P.
Pauli conjugate_1q(Gate1Q g, const Pauli& p, int q);

// CNOT with given control/target.
Pauli conjugate_cnot(const Pauli& p, int control, int target);

}  // namespace ftlab

#endif
