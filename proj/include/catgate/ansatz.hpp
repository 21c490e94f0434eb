#pragma once

#include <stdexcept>
#include <vector>

#include "catgate/control_law.hpp"

namespace catgate {

// Single-hidden-layer network with cosine input features:
//   mu(t)  = sum_i W2_i tanh(W1_i cos(2pi t/L + phi1_i) + B1_i) + B2
//   eta(t) = sum_i W4_i tanh(W3_i cos(pi t/L + phi2_i) + B3_i) + B4
// B2 and B4 are pinned so mu(0) = mu0 and eta(0) = eta0 exactly; they are
// derived quantities, recomputed from the learnable parameters on demand,
// and their dependence is part of every gradient.
struct AnsatzParams {
    int n_hidden = 6;  // split floor(n/2) mu-branch + rest eta-branch
    std::vector<double> W1, B1, phi1, W2;  // mu branch
    std::vector<double> W3, B3, phi2, W4;  // eta branch
    double mu0 = 0.0, eta0 = 0.0;
    double L = 1.0;

    int n_mu() const { return n_hidden / 2; }
    int n_eta() const { return n_hidden - n_hidden / 2; }
    int n_learnable() const { return 4 * n_hidden; }
    // learnable index layout: [W1 B1 phi1 W2 | W3 B3 phi2 W4], each block
    // branch-sized; W2/W4 are the output weights (fast learning-rate group)
    bool is_output_weight(int idx) const;

    double pinned_B2() const;
    double pinned_B4() const;
};

AnsatzParams random_ansatz(int n_hidden, double mu0, double eta0, double L, unsigned seed);

// Values and exact derivatives at one time, plus per-parameter gradients.
struct AnsatzEval {
    double mu, eta, dmu, deta;
    std::vector<double> dmu_dp, deta_dp;    // size n_learnable
    std::vector<double> ddmu_dp, ddeta_dp;  // gradients of the time derivatives
};

AnsatzEval eval_with_gradients(const AnsatzParams& p, double t);
void eval_values(const AnsatzParams& p, double t, double& mu, double& eta,
                 double& dmu, double& deta);

ControlPath forward(const AnsatzParams& p, const std::vector<double>& tgrid);
ControlPath forward_grid(const AnsatzParams& p, int n_points);

class ConvergenceFailure : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Fits the network to the trig path (gradient descent on the mean-square
// error); returns the final max pointwise error over the fit grid.
// Throws ConvergenceFailure above 1e-2.
double pretrain(AnsatzParams& p, double Lambda, int iters, int n_grid = 1001);

}  // namespace catgate
