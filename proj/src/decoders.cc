#include "ftlab/decoders.hh"

#include <cassert>

namespace ftlab {

namespace {

int parity_over(const std::vector<int>& m, const std::vector<int>& sup) {
    int p = 0;
    for (int q : sup) p ^= m[q];
    return p;
}

const std::vector<std::vector<int>>& checks(const CssCode& c, char basis) {
    return basis == 'Z' ? c.z_stabs : c.x_stabs;
}
const std::vector<std::vector<int>>& values(const CssCode& c, char basis) {
    return basis == 'Z' ? c.logical_z : c.logical_x;
}

}  // namespace

Decoded decode_detect(const CssCode& c, const std::vector<int>& m, char basis) {
    assert((int)m.size() == c.n);
    for (const auto& s : checks(c, basis))
        if (parity_over(m, s)) return Decoded::all_erased(c.k);
    Decoded d;
    for (const auto& sup : values(c, basis)) d.bits.push_back(parity_over(m, sup));
    return d;
}

Decoded decode_correct(const CssCode& c, const std::vector<int>& m, char basis) {
    assert((int)m.size() == c.n);
    const auto& chk = checks(c, basis);
    std::vector<int> syn;
    for (const auto& s : chk) syn.push_back(parity_over(m, s));
    std::vector<int> mm = m;
    bool nonzero = false;
    for (int s : syn) nonzero |= s != 0;
    if (nonzero) {
        // find the qubit whose check membership matches the syndrome
        for (int q = 0; q < c.n; q++) {
            bool match = true;
            for (size_t t = 0; t < chk.size() && match; t++) {
                int member = 0;
                for (int j : chk[t]) member |= j == q;
                match = member == syn[t];
            }
            if (match) {
                mm[q] ^= 1;
                break;
            }
        }
        // no match: more than one error; fall through with best effort
    }
    Decoded d;
    for (const auto& sup : values(c, basis)) d.bits.push_back(parity_over(mm, sup));
    return d;
}

Decoded decode_c4(const std::vector<int>& m, char basis) {
    static const CssCode c = code_c4();
    return decode_detect(c, m, basis);
}

Decoded decode_steane(const std::vector<int>& m, char basis) {
    static const CssCode c = code_steane();
    return decode_correct(c, m, basis);
}

Decoded decode_hamming(int r, const std::vector<int>& m, char basis) {
    // built lazily per r; r is tiny so a simple cache suffices
    static std::vector<CssCode> cache;
    while ((int)cache.size() <= r) cache.push_back(CssCode{});
    if (cache[r].n == 0) cache[r] = code_hamming(r);
    return decode_correct(cache[r], m, basis);
}

Decoded decode_c6_registers(const std::array<int, 6>& m,
                            const std::array<bool, 3>& pair_erased, char basis) {
    // register bits m1..m6 (here m[0..5]) in pairs (m1,m2),(m3,m4),(m5,m6)
    int ne = pair_erased[0] + pair_erased[1] + pair_erased[2];
    if (ne >= 2) return Decoded::all_erased(2);
    auto bit = [&](int i) { return m[i - 1]; };  // formulas below are 1-based
    Decoded d;
    if (ne == 1) {
        if (pair_erased[0])
            d.bits = {bit(3) ^ bit(4) ^ bit(6), bit(4) ^ bit(5)};
        else if (pair_erased[1])
            d.bits = {bit(1) ^ bit(2) ^ bit(5), bit(2) ^ bit(5) ^ bit(6)};
        else
            d.bits = {bit(2) ^ bit(3), bit(1) ^ bit(3) ^ bit(4)};
        return d;
    }
    // no erasure: verify both checks, then read out (basis-dependent form)
    if ((bit(1) ^ bit(3) ^ bit(5)) || (bit(2) ^ bit(4) ^ bit(6)))
        return Decoded::all_erased(2);
    if (basis == 'Z')
        d.bits = {bit(2) ^ bit(3), bit(1) ^ bit(3) ^ bit(4)};
    else
        d.bits = {bit(3) ^ bit(4) ^ bit(6), bit(4) ^ bit(5)};
    return d;
}

int decode_erasure_filling_l2(const std::vector<int>& m) {
    assert(m.size() == 7);
    static const CssCode steane = code_steane();
    std::vector<int> erased;
    for (int q = 0; q < 7; q++)
        if (m[q] < 0) erased.push_back(q);
    if (erased.size() <= 2 && !erased.empty()) {
        // solve the three parity checks for the erased entries (GF(2));
        // a unique consistent solution reconstructs the codeword exactly
        int ne = (int)erased.size();
        for (int fill = 0; fill < (1 << ne); fill++) {
            std::vector<int> mm = m;
            for (int t = 0; t < ne; t++) mm[erased[t]] = (fill >> t) & 1;
            bool ok = true;
            for (const auto& s : steane.z_stabs) ok &= parity_over(mm, s) == 0;
            if (ok) return parity_over(mm, steane.logical_z[0]);
        }
    }
    // inconsistent (erasures plus an extra error) or >2 erasures:
    // zero-fill and let syndrome correction do its best
    std::vector<int> mm = m;
    for (int& v : mm)
        if (v < 0) v = 0;
    return decode_correct(steane, mm, 'Z').bits[0];
}

}  // namespace ftlab
