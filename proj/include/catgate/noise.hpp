#pragma once

#include <string>
#include <vector>

#include "catgate/ansatz.hpp"
#include "catgate/fidelity.hpp"
#include "catgate/params.hpp"
#include "catgate/propagator.hpp"

namespace catgate {

struct SystematicSweepResult {
    char axis = 'x';
    std::vector<double> delta;
    std::vector<double> fidelity;
};

// Multiplicative amplitude error on one control axis: Omega_k -> (1+delta) Omega_k.
SystematicSweepResult systematic_sweep(const AnsatzParams& trained, const GateSpec& gate,
                                       char axis, const std::vector<double>& deltas,
                                       int n_slices);

// Additive white Gaussian noise on all three axes; per-axis variance set by
// the signal power and the SNR in dB.
DriveFields awgn_apply(const DriveFields& f, double snr_db, unsigned seed);

struct AwgnResult {
    std::vector<int> runs;           // cumulative run count 50p
    std::vector<double> mean_fidelity;
    std::vector<double> log10_dF;    // log10 |mean - ideal|
    double ideal_fidelity = 0.0;
    double final_dF = 0.0;
    double rms_deviation = 0.0;      // per-run RMS of F - ideal (fluctuation scale)
    int p_stop = 0;                  // p at which the running mean settled
    bool converged = false;
};

// Monte Carlo over noise realizations of the given drive; run r uses seed
// base_seed + r.  Running mean recorded every 50 runs; stops early once it
// moves < 1e-5 over 10 consecutive checkpoints.
AwgnResult awgn_monte_carlo(const DriveFields& base, const std::vector<double>& tgrid,
                            const GateSpec& gate, double snr_db, int p_max,
                            unsigned base_seed);

struct DecoherenceResult {
    double fidelity = 0.0;   // state fidelity from |C+> at t = L
    double trace_drift = 0.0;
};

DecoherenceResult decoherence_run(const AnsatzParams& trained, const GateSpec& gate,
                                  const PhysicalParams& pp, double gamma,
                                  double gamma_phi, int n_slices);

}  // namespace catgate
