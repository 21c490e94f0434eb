#include "catgate/trainer.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>

#include "catgate/propagator.hpp"

namespace catgate {

namespace {

constexpr double kPi = 3.14159265358979323846;
using Eigen::Matrix2cd;

struct OmegaEval {
    std::array<double, 3> omega;
    // chain of the Omega formulas through (mu, eta, mu', eta')
    std::vector<std::array<double, 3>> domega;  // [param][axis]
};

OmegaEval omega_chain(const AnsatzEval& e, int np) {
    OmegaEval o;
    const double cm2 = std::cos(2.0 * e.mu), sm2 = std::sin(2.0 * e.mu);
    const double sm = std::sin(e.mu);
    const double ce = std::cos(e.eta), se = std::sin(e.eta);
    o.omega = {0.25 * (e.deta * se * sm2 - 2.0 * e.dmu * ce),
               0.25 * (e.deta * ce * sm2 + 2.0 * e.dmu * se),
               -0.5 * e.deta * sm * sm};
    const double jx[4] = {0.5 * e.deta * se * cm2,
                          0.25 * (e.deta * ce * sm2 + 2.0 * e.dmu * se), -0.5 * ce,
                          0.25 * se * sm2};
    const double jy[4] = {0.5 * e.deta * ce * cm2,
                          0.25 * (-e.deta * se * sm2 + 2.0 * e.dmu * ce), 0.5 * se,
                          0.25 * ce * sm2};
    const double jz[4] = {-0.5 * e.deta * sm2, 0.0, 0.0, -0.5 * sm * sm};
    o.domega.resize(np);
    for (int p = 0; p < np; ++p) {
        const double dm = e.dmu_dp[p], de = e.deta_dp[p];
        const double ddm = e.ddmu_dp[p], dde = e.ddeta_dp[p];
        o.domega[p] = {jx[0] * dm + jx[1] * de + jx[2] * ddm + jx[3] * dde,
                       jy[0] * dm + jy[1] * de + jy[2] * ddm + jy[3] * dde,
                       jz[0] * dm + jz[1] * de + jz[2] * ddm + jz[3] * dde};
    }
    return o;
}

std::complex<double> tr_prod(const Matrix2cd& a, const Matrix2cd& b) {
    return a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0) + a(1, 0) * b(0, 1) +
           a(1, 1) * b(1, 1);
}

// slice propagator and its parameter sensitivities from the two endpoint evals
struct SliceStep {
    Matrix2cd S;
    std::vector<Matrix2cd> dS;  // per learnable parameter
};

SliceStep slice_step(const OmegaEval& lo, const OmegaEval& hi, double dt, int np,
                     bool with_grad) {
    SliceStep st;
    const std::array<double, 3> v = {0.5 * (lo.omega[0] + hi.omega[0]) * dt,
                                     0.5 * (lo.omega[1] + hi.omega[1]) * dt,
                                     0.5 * (lo.omega[2] + hi.omega[2]) * dt};
    st.S = su2_step(v);
    if (!with_grad) return st;
    const auto dSdv = su2_step_derivatives(v);
    st.dS.assign(np, Matrix2cd::Zero());
    for (int p = 0; p < np; ++p) {
        for (int k = 0; k < 3; ++k) {
            const double dv = 0.5 * dt * (lo.domega[p][k] + hi.domega[p][k]);
            if (dv != 0.0) st.dS[p] += dv * dSdv[k];
        }
    }
    return st;
}

double& param_ref(AnsatzParams& p, int k) {
    const int nm = p.n_mu();
    if (k < nm) return p.W1[k];
    if (k < 2 * nm) return p.B1[k - nm];
    if (k < 3 * nm) return p.phi1[k - 2 * nm];
    if (k < 4 * nm) return p.W2[k - 3 * nm];
    const int j = k - 4 * nm;
    const int ne = p.n_eta();
    if (j < ne) return p.W3[j];
    if (j < 2 * ne) return p.B3[j - ne];
    if (j < 3 * ne) return p.phi2[j - 2 * ne];
    return p.W4[j - 3 * ne];
}

GateSpec branch_target(const GateSpec& gate) {
    if (gate.dim == 2) return gate;
    if (!gate.has_angles)
        throw std::invalid_argument("train: gate has no single-qubit branch angles");
    GateSpec g = target_from_angles(gate.mu0, gate.eta0, gate.theta_ideal);
    g.name = gate.name;
    return g;
}

}  // namespace

double default_pretrain_lambda(const std::string& gate_name) {
    if (gate_name == "T") return 2.31253;
    if (gate_name == "Tdag") return 0.69526;
    if (gate_name == "X") return 0.80891;
    if (gate_name == "H") return 0.38667;
    if (gate_name == "Rx_pi4") return 0.18826;
    if (gate_name == "CNOTmod") return 0.80891;  // X branch
    throw std::invalid_argument("no default pretraining amplitude for gate " + gate_name);
}

double theta_error_mod_pi(double theta, double theta_ideal) {
    return std::abs(std::remainder(theta - theta_ideal, kPi));
}

double fidelity_of_params(const AnsatzParams& p, const GateSpec& gate, int n_slices) {
    const GateSpec g = branch_target(gate);
    const ControlPath path = forward_grid(p, n_slices + 1);
    const DriveFields f = omega_from_path(path);
    const UnitarySequence seq = evolve_subspace(f, path.t);
    return average_fidelity(g.U, seq.cumulative.back());
}

SweepResult sweep(AnsatzParams& p, const GateSpec& gate, const TrainConfig& cfg,
                  int phase) {
    const GateSpec g = branch_target(gate);
    const Matrix2cd ua = g.U.adjoint();
    const int n = cfg.n_slices;
    const int np = p.n_learnable();
    const double dt = p.L / n;
    const double lr_fast = phase == 1 ? cfg.lr1_fast : cfg.lr2_fast;
    const double lr_slow = phase == 1 ? cfg.lr1_slow : cfg.lr2_slow;

    Matrix2cd U = Matrix2cd::Identity();
    std::vector<Matrix2cd> V(np, Matrix2cd::Zero());
    OmegaEval lo = omega_chain(eval_with_gradients(p, 0.0), np);

    std::vector<Matrix2cd> Vnew(np);
    for (int j = 0; j < n; ++j) {
        const double t0 = dt * j, t1 = dt * (j + 1);
        const OmegaEval hi = omega_chain(eval_with_gradients(p, t1), np);
        const SliceStep st = slice_step(lo, hi, dt, np, true);
        const Matrix2cd Unew = st.S * U;
        const std::complex<double> trm = tr_prod(ua, Unew);
        for (int k = 0; k < np; ++k) {
            Vnew[k] = st.dS[k] * U + st.S * V[k];
            const double grad =
                (std::conj(trm) * tr_prod(ua, Vnew[k])).real() / 3.0;
            param_ref(p, k) += (p.is_output_weight(k) ? lr_fast : lr_slow) * grad;
        }
        // commit the slice with the post-update parameters
        if (cfg.exact_recompute) {
            U = Matrix2cd::Identity();
            for (auto& v : V) v.setZero();
            OmegaEval a = omega_chain(eval_with_gradients(p, 0.0), np);
            for (int i = 0; i <= j; ++i) {
                const OmegaEval b =
                    omega_chain(eval_with_gradients(p, dt * (i + 1)), np);
                const SliceStep si = slice_step(a, b, dt, np, true);
                for (int k = 0; k < np; ++k) V[k] = si.dS[k] * U + si.S * V[k];
                U = si.S * U;
                a = b;
            }
            lo = a;
        } else {
            const OmegaEval lo2 = omega_chain(eval_with_gradients(p, t0), np);
            const OmegaEval hi2 = omega_chain(eval_with_gradients(p, t1), np);
            const SliceStep st2 = slice_step(lo2, hi2, dt, np, true);
            for (int k = 0; k < np; ++k) V[k] = st2.dS[k] * U + st2.S * V[k];
            U = st2.S * U;
            lo = hi2;
        }
    }

    SweepResult r;
    const ControlPath path = forward_grid(p, n + 1);
    const DriveFields f = omega_from_path(path);
    const UnitarySequence seq = evolve_subspace(f, path.t);
    r.fidelity = average_fidelity(g.U, seq.cumulative.back());
    r.theta = geometric_theta(path);
    return r;
}

std::vector<double> slice_fidelity_gradient(const AnsatzParams& p_in, const GateSpec& gate,
                                            int slice, int n_slices) {
    AnsatzParams p = p_in;
    const GateSpec g = branch_target(gate);
    const Matrix2cd ua = g.U.adjoint();
    const int np = p.n_learnable();
    const double dt = p.L / n_slices;

    Matrix2cd U = Matrix2cd::Identity();
    std::vector<Matrix2cd> V(np, Matrix2cd::Zero());
    OmegaEval lo = omega_chain(eval_with_gradients(p, 0.0), np);
    for (int j = 0; j <= slice; ++j) {
        const OmegaEval hi = omega_chain(eval_with_gradients(p, dt * (j + 1)), np);
        const SliceStep st = slice_step(lo, hi, dt, np, true);
        for (int k = 0; k < np; ++k) V[k] = st.dS[k] * U + st.S * V[k];
        U = st.S * U;
        lo = hi;
    }
    const std::complex<double> trm = tr_prod(ua, U);
    std::vector<double> grad(np);
    for (int k = 0; k < np; ++k)
        grad[k] = (std::conj(trm) * tr_prod(ua, V[k])).real() / 3.0;
    return grad;
}

TrainResult train(const GateSpec& gate, const TrainConfig& cfg) {
    const auto t_start = std::chrono::steady_clock::now();
    const GateSpec g = branch_target(gate);

    TrainResult res;
    res.params = random_ansatz(cfg.n_hidden, g.mu0, g.eta0, cfg.L, cfg.seed);
    const double lam = cfg.pretrain_lambda >= 0.0 ? cfg.pretrain_lambda
                                                  : default_pretrain_lambda(g.name);
    res.pretrain_err = pretrain(res.params, lam, cfg.pretrain_iters);

    // a seed already at target trains zero sweeps; sweeping a converged
    // solution drags it off the optimum (the greedy objective rewards
    // intermediate-time fidelity, not F(L))
    const double seed_f = fidelity_of_params(res.params, g, cfg.n_slices);
    const int total = seed_f >= cfg.target_fidelity ? 0 : cfg.sweeps1 + cfg.sweeps2;
    for (int s = 0; s < total; ++s) {
        const int phase = s < cfg.sweeps1 ? 1 : 2;
        const SweepResult sr = sweep(res.params, g, cfg, phase);
        res.history.fidelity.push_back(sr.fidelity);
        res.history.theta.push_back(sr.theta);
        res.sweeps_run = s + 1;
        if (sr.fidelity < 0.01)
            throw DivergenceDetected("train: fidelity collapsed at sweep " +
                                     std::to_string(s + 1));
        if (cfg.verbose && ((s + 1) % 100 == 0 || s + 1 == total))
            std::fprintf(stderr, "sweep %4d  F = %.6f  theta = %.6f\n", s + 1,
                         sr.fidelity, sr.theta);
        if (sr.fidelity >= cfg.target_fidelity) break;
    }

    if (res.history.fidelity.empty()) {  // zero-sweep run: pretrained baseline
        res.final_fidelity = fidelity_of_params(res.params, g, cfg.n_slices);
        res.theta = geometric_theta(forward_grid(res.params, cfg.n_slices + 1));
    } else {
        res.final_fidelity = res.history.fidelity.back();
        res.theta = res.history.theta.back();
    }
    res.theta_err = theta_error_mod_pi(res.theta, g.theta_ideal);
    res.history.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start)
            .count();
    return res;
}

}  // namespace catgate
