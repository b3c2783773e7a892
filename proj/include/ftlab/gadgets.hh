#ifndef FTLAB_GADGETS_HH
#define FTLAB_GADGETS_HH

#include <array>
#include <vector>

#include "ftlab/circuit.hh"
#include "ftlab/codes.hh"

namespace ftlab {

enum class IdlePolicy { none, lockstep };

// one code block = an ordered set of physical qubit indices
struct Block {
    const CssCode* code = nullptr;
    std::vector<int> q;
};

// verification parity: fires (gadget would be discarded) when the parity of
// the listed record bits is odd
struct VerFlag {
    std::vector<int32_t> meas;
};

// Layered circuit builder.  Layers model time steps: lockstep idling inserts
// an I location for every live unprotected qubit a layer does not touch.
// Measurement record indices are assigned at emission time (stable under
// later layer insertions), so gadgets can reference their own outcomes.
class GadgetBuilder {
  public:
    explicit GadgetBuilder(const CssCode& code) : code_(&code) {}

    const CssCode& code() const { return *code_; }

    int new_qubit(bool protect = false);
    Block new_block(bool protect = false);
    void protect_block(const Block& b);  // exempt from idle noise (error-free role)

    void op(int layer, LocKind k, int a, int b = -1, bool noiseless = false);
    int add_meas(int layer, LocKind k, int q, bool noiseless);  // -> record index
    void corr(int layer, LocKind pauli, int q, std::vector<int32_t> ctrl);

    struct Prep {
        Block block;
        std::vector<VerFlag> flags;  // one verified-prep instance
        int end = 0;
    };
    // Verified preparation of |0..0> ('Z') or |+..+> ('X') per the code:
    // the distance-2 4-qubit code uses the dedicated 8-qubit gadget, the
    // 7-qubit code a single-ancilla logical-parity check (or the two-block
    // conventional variant), the Hamming family and the 6-qubit code a
    // measured-copy check of all stabilizer and logical parities.
    Prep prep_verified(char basis, int start, bool noiseless);
    Prep prep_steane_conventional(char basis, int start, bool noiseless);

    // bare encoder, no verification (used for error-free sections)
    Block prep_unverified(char basis, int start, bool noiseless, int* end);

    struct Bell {
        Block zero_side, plus_side;  // zero_side is the transversal-CNOT target
        std::vector<std::vector<VerFlag>> instances;
        // Detection stage (distance-2 codes only): the raw pair is teleported
        // through two fresh raw pairs; both measured halves decode to definite
        // classes on good shots, and any nonzero syndrome discards the attempt.
        // det_mx = X-measurements of the raw halves, det_mz = Z-measurements of
        // the consumed fresh halves; empty when no detection stage is emitted.
        std::array<std::vector<int32_t>, 2> det_mx, det_mz;
        int end = 0;
    };
    Bell bell_pair(int start, bool noiseless);

    // pairwise CNOTs, one layer; returns the next free layer
    int transversal_cnot(const Block& ctrl, const Block& tgt, int layer, bool noiseless);

    struct Meas {
        std::vector<int32_t> m;  // record index per physical qubit
        int end = 0;
    };
    Meas measure_block(const Block& b, char basis, int layer, bool noiseless);

    // Teleportation-based error correction: fresh logical Bell pair,
    // transversal CNOT data->zero_side, X-measure data, Z-measure zero_side;
    // plus_side becomes the new data block.  Decoding and the logical Pauli
    // frame update happen classically in the estimator.
    struct Ec {
        Block out;
        std::vector<int32_t> mx_data, mz_anc;
        std::array<std::vector<int32_t>, 2> det_mx, det_mz;  // from the Bell pair
        std::vector<std::vector<VerFlag>> instances;
        int end = 0;
    };
    Ec knill_ec(const Block& data, int start, bool noiseless);

    int bell_depth();  // layer count of one noisy bell_pair (for pipelining)

    int n_layers() const { return (int)layers_.size(); }
    Circuit finalize(IdlePolicy policy);

  private:
    void attach_detection(Bell& out, int dz, int dx, int M);

    const CssCode* code_;
    std::vector<std::vector<Location>> layers_;
    int n_qubits_ = 0, n_meas_ = 0;
    std::vector<uint8_t> protected_;
    int bell_depth_ = -1;
};

// Compiled logical-CNOT benchmark plus the metadata needed to post-process a
// shot record: error-free logical Bell pairs (reference R_c,R_t and data
// D_c,D_t), `rounds` noisy repetitions of [transversal logical CNOT D_c->D_t,
// EC on D_c, EC on D_t], then an error-free logical Bell measurement of each
// pair.  The simplified variant runs one noisy round followed by one
// noiseless logical CNOT and divides by 1 instead of rounds.
struct BenchmarkProgram {
    Circuit circuit;
    CssCode code;
    int rounds = 10;
    double divisor = 10;
    bool trailing_noiseless_cnot = false;

    struct EcMeta {
        std::vector<int32_t> mx_data, mz_anc;
        // Bell-detection measurements (distance-2 codes): their decoded classes
        // are teleportation byproducts folded into the frame beliefs
        std::array<std::vector<int32_t>, 2> det_mx, det_mz;
    };
    std::vector<std::array<EcMeta, 2>> round_ecs;  // [round][0]=pair c, [1]=pair t

    std::array<std::vector<int32_t>, 2> final_mx_ref, final_mz_data;  // per pair
    std::vector<std::vector<VerFlag>> ver_instances;
};

enum class BenchVariant { full, single_round };

BenchmarkProgram build_cnot_benchmark(const CssCode& code, int rounds = 10,
                                      BenchVariant variant = BenchVariant::full,
                                      IdlePolicy idle = IdlePolicy::lockstep);

}  // namespace ftlab

#endif
