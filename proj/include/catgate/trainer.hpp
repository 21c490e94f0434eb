#pragma once

#include <stdexcept>
#include <vector>

#include "catgate/ansatz.hpp"
#include "catgate/fidelity.hpp"

namespace catgate {

struct TrainConfig {
    int n_slices = 1000;
    int n_hidden = 6;
    double L = 1.0;  // protocol duration
    // two-phase schedule; "fast" applies to the output weights W2/W4
    double lr1_fast = 1e-4, lr1_slow = 1e-5;
    int sweeps1 = 1240;
    double lr2_fast = 1e-5, lr2_slow = 1e-6;
    int sweeps2 = 1890;
    double target_fidelity = 0.9999;
    unsigned seed = 42;
    int pretrain_iters = 10000;
    double pretrain_lambda = -1.0;  // < 0: per-gate default table
    bool exact_recompute = false;   // O(n^2) reference mode, tests only
    bool verbose = false;
};

struct SweepResult {
    double fidelity;  // clean F(L) recomputed after the sweep
    double theta;     // geometric phase of the post-sweep path
};

struct TrainHistory {
    std::vector<double> fidelity;  // one entry per sweep
    std::vector<double> theta;
    double wall_seconds = 0.0;
};

struct TrainResult {
    AnsatzParams params;
    TrainHistory history;
    double final_fidelity = 0.0;
    double theta = 0.0;
    double theta_err = 0.0;  // distance to theta_ideal mod pi
    double pretrain_err = 0.0;
    int sweeps_run = 0;
};

class DivergenceDetected : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Per-gate default pretraining amplitude Lambda for the trig seed path.
double default_pretrain_lambda(const std::string& gate_name);

// One greedy pass over the time grid: at each slice, gradient of F(t_{j+1})
// with respect to every learnable parameter through the tentative slice
// propagator, ascent update, then the slice is committed with the updated
// parameters.  Returns the clean end-of-protocol fidelity and theta.
SweepResult sweep(AnsatzParams& p, const GateSpec& gate, const TrainConfig& cfg,
                  int phase);

// Gradient of F(t_{slice+1}) at fixed parameters, for cross-checks.
std::vector<double> slice_fidelity_gradient(const AnsatzParams& p, const GateSpec& gate,
                                            int slice, int n_slices);

double fidelity_of_params(const AnsatzParams& p, const GateSpec& gate, int n_slices);

TrainResult train(const GateSpec& gate, const TrainConfig& cfg);

double theta_error_mod_pi(double theta, double theta_ideal);

}  // namespace catgate
