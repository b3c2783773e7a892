#ifndef FTLAB_NOISE_HH
#define FTLAB_NOISE_HH

#include "ftlab/circuit.hh"
#include "ftlab/rng.hh"
#include "ftlab/tableau.hh"

namespace ftlab {

// Circuit-level depolarizing model.  Faults land after preparations and gates
// and before measurements:
//   prep_0: X with prob p          prep_plus: Z with prob p
//   meas_Z: X with prob p          meas_X:    Z with prob p
//   1q gate (X,Y,Z,H,S): one of {X,Y,Z}, each p/3
//   idle (I gate): one of {X,Y,Z}, each gamma/3   (gamma in {p, p/2, p/10})
//   CNOT: one of the 15 non-identity 2q Paulis, each p/15
// Classical processing and classically controlled corrections are noiseless.
struct NoiseParams {
    double p = 0.0;
    double gamma = 0.0;

    static NoiseParams depolarizing(double p, double gamma_div = 1.0) {
        return NoiseParams{p, p / gamma_div};
    }
};

// Draws one fault configuration (used with tableau_run / run_with_faults).
FaultMap sample_faults(const Circuit& c, const NoiseParams& np, Rng& rng);

// Sample one fault at location i (no Bernoulli; used by the fault enumerator
// and by the samplers).  Returns the k-th nonidentity fault for this location
// kind, k in [0, n_faults_at(kind)).
SitePauli fault_at(LocKind kind, int k);
int n_faults_at(LocKind kind);

}  // namespace ftlab

#endif
