#ifndef FTLAB_DECODERS_HH
#define FTLAB_DECODERS_HH

#include <array>
#include <vector>

#include "ftlab/codes.hh"

namespace ftlab {

// decoded logical bits; -1 marks an erasure ("E")
struct Decoded {
    std::vector<int> bits;

    bool erased() const {
        for (int b : bits)
            if (b < 0) return true;
        return false;
    }
    static Decoded all_erased(int k) { return Decoded{std::vector<int>(k, -1)}; }
};

// Distance-2 style decoding: evaluate the basis checks; any violation erases
// every logical output, otherwise report the logical parities.
// basis 'Z': m are Z-measurement outcomes (checks = z_stabs, values over
// logical_z); basis 'X' dual.
Decoded decode_detect(const CssCode& c, const std::vector<int>& m, char basis);

// Distance-3 style: single-error syndrome correction (the syndrome pattern is
// matched against check-membership columns), then logical parities.
Decoded decode_correct(const CssCode& c, const std::vector<int>& m, char basis);

// Convenience wrappers with the project's standard codes.
Decoded decode_c4(const std::vector<int>& m, char basis);
Decoded decode_steane(const std::vector<int>& m, char basis);
Decoded decode_hamming(int r, const std::vector<int>& m, char basis);

// Register-level decoder for the 6-register outer block of the self-dual
// 2-qubit chain: inputs are six decoded register bits grouped in pairs,
// any pair may be erased.  Two or more erased pairs -> (E,E).
Decoded decode_c6_registers(const std::array<int, 6>& m,
                            const std::array<bool, 3>& pair_erased, char basis);

// Level-2 decoder of the 7-register outer block over the distance-2 inner
// code: m has 7 entries, -1 = erased register.  Up to two erasures are filled
// by solving the parity checks; if that is inconsistent (extra error on top),
// erasures are zero-filled and syndrome correction runs.  Never erases.
int decode_erasure_filling_l2(const std::vector<int>& m);

}  // namespace ftlab

#endif
