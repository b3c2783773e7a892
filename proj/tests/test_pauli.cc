#include "ftlab/pauli.hh"

#include <array>
#include <complex>

#include "doctest.h"

using namespace ftlab;
using cd = std::complex<double>;
using Mat = std::array<std::array<cd, 4>, 4>;  // 2-qubit operators

namespace {

const cd I1(0, 1);

std::array<std::array<cd, 2>, 2> letter_mat(char c) {
    switch (c) {
        case 'I': return {{{1, 0}, {0, 1}}};
        case 'X': return {{{0, 1}, {1, 0}}};
        case 'Y': return {{{0, -I1}, {I1, 0}}};
        case 'Z': return {{{1, 0}, {0, -1}}};
    }
    REQUIRE(false);
    return {};
}

std::array<std::array<cd, 2>, 2> gate_mat(Gate1Q g) {
    double s = 1.0 / std::sqrt(2.0);
    switch (g) {
        case Gate1Q::I: return letter_mat('I');
        case Gate1Q::X: return letter_mat('X');
        case Gate1Q::Y: return letter_mat('Y');
        case Gate1Q::Z: return letter_mat('Z');
        case Gate1Q::H: return {{{s, s}, {s, -s}}};
        case Gate1Q::S: return {{{1, 0}, {0, I1}}};
    }
    return {};
}

Mat kron(const std::array<std::array<cd, 2>, 2>& a, const std::array<std::array<cd, 2>, 2>& b) {
    Mat m{};
    for (int i = 0; i < 2; i++)
        for (int j = 0; j < 2; j++)
            for (int k = 0; k < 2; k++)
                for (int l = 0; l < 2; l++) m[2 * i + k][2 * j + l] = a[i][j] * b[k][l];
    return m;
}

Mat matmul(const Mat& a, const Mat& b) {
    Mat m{};
    for (int i = 0; i < 4; i++)
        for (int j = 0; j < 4; j++) {
            cd s = 0;
            for (int k = 0; k < 4; k++) s += a[i][k] * b[k][j];
            m[i][j] = s;
        }
    return m;
}

Mat dagger(const Mat& a) {
    Mat m{};
    for (int i = 0; i < 4; i++)
        for (int j = 0; j < 4; j++) m[i][j] = std::conj(a[j][i]);
    return m;
}

bool approx_eq(const Mat& a, const Mat& b) {
    for (int i = 0; i < 4; i++)
        for (int j = 0; j < 4; j++)
            if (std::abs(a[i][j] - b[i][j]) > 1e-9) return false;
    return true;
}

// matrix of a 2-qubit Pauli, qubit 0 = left tensor factor
Mat pauli_mat(const Pauli& p) {
    Mat m = kron(letter_mat(p.letter(0)), letter_mat(p.letter(1)));
    cd ph = std::pow(I1, p.phase);
    for (auto& row : m)
        for (auto& v : row) v *= ph;
    return m;
}

Mat cnot_mat() {  // control 0, target 1
    Mat m{};
    m[0][0] = m[1][1] = m[2][3] = m[3][2] = 1;
    return m;
}

Mat swap_ct(const Mat& m) {  // relabel tensor factors
    Mat o{};
    auto perm = [](int v) { return ((v & 1) << 1) | (v >> 1); };
    for (int i = 0; i < 4; i++)
        for (int j = 0; j < 4; j++) o[perm(i)][perm(j)] = m[i][j];
    return o;
}

Pauli two_qubit_pauli(int idx, int phase) {
    static const char* L = "IZXY";
    Pauli p(2);
    p.set_letter(0, L[idx >> 2]);
    p.set_letter(1, L[idx & 3]);
    p.phase = (uint8_t)phase;
    return p;
}

}  // namespace

TEST_CASE("pauli product matches matrix oracle (all 2q letter pairs, all phases)") {
    for (int a = 0; a < 16; a++)
        for (int pa = 0; pa < 4; pa++)
            for (int b = 0; b < 16; b++) {
                Pauli A = two_qubit_pauli(a, pa), B = two_qubit_pauli(b, 0);
                CHECK(approx_eq(pauli_mat(A * B), matmul(pauli_mat(A), pauli_mat(B))));
            }
}

TEST_CASE("conjugate_1q matches matrix oracle on every gate/qubit/pauli") {
    for (int gi = 0; gi < 6; gi++) {
        auto g = (Gate1Q)gi;
        for (int q = 0; q < 2; q++) {
            Mat G = q == 0 ? kron(gate_mat(g), letter_mat('I'))
                           : kron(letter_mat('I'), gate_mat(g));
            for (int idx = 0; idx < 16; idx++)
                for (int ph = 0; ph < 4; ph++) {
                    Pauli p = two_qubit_pauli(idx, ph);
                    Mat want = matmul(matmul(G, pauli_mat(p)), dagger(G));
                    CHECK(approx_eq(pauli_mat(conjugate_1q(g, p, q)), want));
                }
        }
    }
}

TEST_CASE("conjugate_cnot matches matrix oracle, both orientations") {
    for (int orient = 0; orient < 2; orient++) {
        Mat G = orient == 0 ? cnot_mat() : swap_ct(cnot_mat());
        int c = orient == 0 ? 0 : 1, t = 1 - c;
        for (int idx = 0; idx < 16; idx++)
            for (int ph = 0; ph < 4; ph++) {
                Pauli p = two_qubit_pauli(idx, ph);
                Mat want = matmul(matmul(G, pauli_mat(p)), dagger(G));
                CHECK(approx_eq(pauli_mat(conjugate_cnot(p, c, t)), want));
            }
    }
}

TEST_CASE("string round trip and helpers") {
    Pauli p = Pauli::from_string("-iXYZI");
    CHECK(p.str() == "-iXYZI");
    CHECK(p.weight() == 3);
    CHECK(Pauli::from_string("XX").commutes(Pauli::from_string("ZZ")));
    CHECK(!Pauli::from_string("XI").commutes(Pauli::from_string("ZI")));
    Pauli y = Pauli::from_string("Y");
    // Y = i X Z in this encoding
    CHECK((Pauli::from_string("X") * Pauli::from_string("Z")).str() == "-iY");
    CHECK((y * y).str() == "+I");
}
