#ifndef FTLAB_FRAME_SIM_HH
#define FTLAB_FRAME_SIM_HH

#include "ftlab/circuit.hh"
#include "ftlab/noise.hh"
#include "ftlab/rng.hh"

namespace ftlab {

// Pauli-frame sampler.  One exact tableau pass over the circuit produces a
// reference record; every subsequent shot only propagates the difference
// (the frame) between the noisy run and the reference run, which is linear
// in the faults.  Measurement collapse is reproduced by randomizing the
// conjugate frame component at preparations and after measurements.
//
// Classically controlled Paulis are handled differentially: the correction is
// folded into the frame iff the control parity differs between the noisy bits
// and the reference bits.  For stabilizer circuits this reproduces the exact
// output distribution of the tableau simulation.
struct FrameSim {
    const Circuit* c;
    ShotRecord ref;

    FrameSim(const Circuit& circuit, uint64_t ref_seed);

    // One shot with faults sampled from np; deterministic given rng state.
    ShotRecord run(const NoiseParams& np, Rng& rng) const;

    // One shot with an explicit fault configuration.  fx_out/fz_out, when
    // given, receive the final frame (per-qubit X/Z deviation bits).
    ShotRecord run_with_faults(const FaultMap& faults, Rng& rng,
                               std::vector<uint8_t>* fx_out = nullptr,
                               std::vector<uint8_t>* fz_out = nullptr) const;

  private:
    template <class FaultFor>
    ShotRecord run_core(FaultFor&& fault_for, Rng& rng, std::vector<uint8_t>* fx_out,
                        std::vector<uint8_t>* fz_out) const;
};

}  // namespace ftlab

#endif
