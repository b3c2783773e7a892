#ifndef FTLAB_CODES_HH
#define FTLAB_CODES_HH

#include <string>
#include <vector>

#include "ftlab/circuit.hh"

namespace ftlab {

// CSS code described by stabilizer and logical-operator supports (qubit index
// lists, 0-based).  logical_x[j] / logical_z[j] anticommute pairwise and
// commute across j.
struct CssCode {
    std::string name;
    int n = 0, k = 0;
    int distance = 0;
    std::vector<std::vector<int>> x_stabs, z_stabs;
    std::vector<std::vector<int>> logical_x, logical_z;
};

CssCode code_c4();             // [[4,2,2]]
CssCode code_c6();             // [[6,2,2]]
CssCode code_steane();         // [[7,1,3]]
CssCode code_hamming(int r);   // [[2^r-1, 2^r-1-2r, 3]], r >= 3

// Completes logical_x/logical_z from the stabilizers (GF(2) elimination,
// symplectic pairing).  Builders call this themselves when they don't pin
// specific representatives.
void derive_logicals(CssCode& c);

// Unverified encoder circuits acting on qubits [offset, offset+n).
// encode_zero prepares |0..0> in the logical basis, encode_plus |+..+>.
Circuit encode_zero_circuit(const CssCode& c, int offset = 0);
Circuit encode_plus_circuit(const CssCode& c, int offset = 0);

// Sparse CNOT schedule for the Hamming-code encoders: entry (i, j) nonzero
// means a CNOT from control qubit 2^i - 1 to qubit j at that depth.
struct LatinRectangle {
    int r = 0, n = 0, depth = 0;
    std::vector<std::vector<int>> rows;  // rows[i][j] in 0..depth
};

LatinRectangle load_latin(int r);  // reads data/latin_r<r>.txt

// Scheduled encoder from the rectangle; basis 'Z' gives |0..0>, 'X' |+..+>
// (the dual schedule: preps swapped, CNOTs reversed).
Circuit latin_encode_circuit(const LatinRectangle& lr, char basis, int offset = 0);

}  // namespace ftlab

#endif
