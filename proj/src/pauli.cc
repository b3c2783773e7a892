#include "ftlab/pauli.hh"

#include <cassert>
#include <stdexcept>

namespace ftlab {

void Pauli::set_letter(int q, char c) {
    switch (c) {
        case 'I': x[q] = 0; z[q] = 0; break;
        case 'Z': x[q] = 0; z[q] = 1; break;
        case 'X': x[q] = 1; z[q] = 0; break;
        case 'Y': x[q] = 1; z[q] = 1; break;
        default: throw std::invalid_argument("bad Pauli letter");
    }
}

Pauli Pauli::from_string(const std::string& s) {
    size_t i = 0;
    uint8_t phase = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        if (s[i] == '-') phase = 2;
        i++;
    }
    if (i < s.size() && s[i] == 'i') {
        phase = (phase + 1) & 3;
        i++;
    }
    Pauli p((int)(s.size() - i));
    for (int q = 0; i < s.size(); i++, q++) p.set_letter(q, s[i]);
    p.phase = phase;
    return p;
}

std::string Pauli::str() const {
    static const char* pre[4] = {"+", "+i", "-", "-i"};
    std::string out = pre[phase];
    for (int q = 0; q < n; q++) out += letter(q);
    return out;
}

Pauli Pauli::single(int n_qubits, int qubit, char letter) {
    Pauli p(n_qubits);
    p.set_letter(qubit, letter);
    return p;
}

// phase picked up when multiplying canonical letters a*b (letters encoded
// v = 2x+z: 0=I 1=Z 2=X 3=Y), exponent of i mod 4.
static const uint8_t kMulPhase[4][4] = {
    //        I  Z  X  Y      (right factor)
    /* I */ { 0, 0, 0, 0 },
    /* Z */ { 0, 0, 1, 3 },   // Z*X=iY, Z*Y=-iX
    /* X */ { 0, 3, 0, 1 },   // X*Z=-iY, X*Y=iZ
    /* Y */ { 0, 1, 3, 0 },   // Y*Z=iX,  Y*X=-iZ
};

Pauli Pauli::operator*(const Pauli& o) const {
    assert(n == o.n);
    Pauli r(n);
    uint8_t ph = (phase + o.phase) & 3;
    for (int q = 0; q < n; q++) {
        int a = x[q] * 2 + z[q], b = o.x[q] * 2 + o.z[q];
        ph = (ph + kMulPhase[a][b]) & 3;
        r.x[q] = x[q] ^ o.x[q];
        r.z[q] = z[q] ^ o.z[q];
    }
    r.phase = ph;
    return r;
}

// Single-qubit conjugation table: for each gate, image of letter v as
// (letter', extra phase).  All gates here map Hermitian Paulis to +/- Paulis,
// so the extra phase is 0 or 2.
struct Img { uint8_t v, ph; };

static const Img kConj1Q[6][4] = {
    // gate I:      I        Z        X        Y
    { {0, 0}, {1, 0}, {2, 0}, {3, 0} },
    // gate X: Z -> -Z, Y -> -Y
    { {0, 0}, {1, 2}, {2, 0}, {3, 2} },
    // gate Y: X -> -X, Z -> -Z
    { {0, 0}, {1, 2}, {2, 2}, {3, 0} },
    // gate Z: X -> -X, Y -> -Y
    { {0, 0}, {1, 0}, {2, 2}, {3, 2} },
    // gate H: X <-> Z, Y -> -Y
    { {0, 0}, {2, 0}, {1, 0}, {3, 2} },
    // gate S: X -> Y, Y -> -X, Z -> Z
    { {0, 0}, {1, 0}, {3, 0}, {2, 2} },
};

Pauli conjugate_1q(Gate1Q g, const Pauli& p, int q) {
    Pauli r = p;
    int v = p.x[q] * 2 + p.z[q];
    const Img& im = kConj1Q[(int)g][v];
    r.x[q] = im.v >> 1;
    r.z[q] = im.v & 1;
    r.phase = (r.phase + im.ph) & 3;
    return r;
}

Pauli conjugate_cnot(const Pauli& p, int c, int t) {
    // Decompose the (c,t) part as i^(xc*zc + xt*zt) Xc^xc Zc^zc Xt^xt Zt^zt,
    // push each factor through (Xc->XcXt, Zt->ZcZt, Zc and Xt fixed) and
    // recompose with exact phases via 2-qubit Pauli products.
    int xc = p.x[c], zc = p.z[c], xt = p.x[t], zt = p.z[t];
    Pauli acc(2);
    acc.phase = (uint8_t)((xc * zc + xt * zt) & 3);
    auto mul = [&](const char* two) { acc = acc * Pauli::from_string(two); };
    if (xc) mul("XX");
    if (zc) mul("ZI");
    if (xt) mul("IX");
    if (zt) mul("ZZ");
    Pauli r = p;
    r.x[c] = acc.x[0]; r.z[c] = acc.z[0];
    r.x[t] = acc.x[1]; r.z[t] = acc.z[1];
    r.phase = (uint8_t)((p.phase + acc.phase) & 3);
    return r;
}

}  // namespace ftlab
