#include "catgate/noise.hpp"

#include <cmath>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <thread>

namespace catgate {

namespace {

int worker_count() {
    if (const char* env = std::getenv("CATGATE_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : int(hw);
}

double end_fidelity(const DriveFields& f, const std::vector<double>& tgrid,
                    const Eigen::MatrixXcd& ideal) {
    const UnitarySequence seq = evolve_subspace(f, tgrid);
    return average_fidelity(ideal, seq.cumulative.back());
}

}  // namespace

SystematicSweepResult systematic_sweep(const AnsatzParams& trained, const GateSpec& gate,
                                       char axis, const std::vector<double>& deltas,
                                       int n_slices) {
    if (gate.dim != 2) throw DimensionMismatch("systematic_sweep: single-qubit gate");
    if (axis != 'x' && axis != 'y' && axis != 'z')
        throw std::invalid_argument("systematic_sweep: axis must be x, y or z");
    const ControlPath path = forward_grid(trained, n_slices + 1);
    const DriveFields base = omega_from_path(path);
    SystematicSweepResult r;
    r.axis = axis;
    r.delta = deltas;
    r.fidelity.reserve(deltas.size());
    for (const double d : deltas) {
        DriveFields f = base;
        std::vector<double>& target = axis == 'x' ? f.ox : axis == 'y' ? f.oy : f.oz;
        for (auto& v : target) v *= 1.0 + d;
        r.fidelity.push_back(end_fidelity(f, path.t, gate.U));
    }
    return r;
}

DriveFields awgn_apply(const DriveFields& f, double snr_db, unsigned seed) {
    const double snr = std::pow(10.0, snr_db / 10.0);
    auto power = [](const std::vector<double>& v) {
        double s = 0.0;
        for (const double x : v) s += x * x;
        return s / double(v.size());
    };
    DriveFields out = f;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    auto corrupt = [&](std::vector<double>& v) {
        const double sigma = std::sqrt(power(v) / snr);
        for (auto& x : v) x += sigma * gauss(rng);
    };
    corrupt(out.ox);
    corrupt(out.oy);
    corrupt(out.oz);
    return out;
}

AwgnResult awgn_monte_carlo(const DriveFields& base, const std::vector<double>& tgrid,
                            const GateSpec& gate, double snr_db, int p_max,
                            unsigned base_seed) {
    if (gate.dim != 2) throw DimensionMismatch("awgn_monte_carlo: single-qubit gate");
    const int block = 50;
    AwgnResult res;
    res.ideal_fidelity = end_fidelity(base, tgrid, gate.U);

    const int nthreads = worker_count();
    double sum = 0.0;
    double sum_sq_dev = 0.0;
    double prev_mean = 0.0;
    int settled = 0;
    for (int p = 1; p <= p_max; ++p) {
        const int r0 = (p - 1) * block;
        std::vector<double> fids(block);
        auto work = [&](int lo, int hi) {
            for (int r = lo; r < hi; ++r) {
                const DriveFields noisy =
                    awgn_apply(base, snr_db, base_seed + unsigned(r0 + r));
                fids[r] = end_fidelity(noisy, tgrid, gate.U);
            }
        };
        if (nthreads <= 1) {
            work(0, block);
        } else {
            std::vector<std::thread> pool;
            const int chunk = (block + nthreads - 1) / nthreads;
            for (int t = 0; t < nthreads; ++t)
                pool.emplace_back(work, t * chunk, std::min(block, (t + 1) * chunk));
            for (auto& th : pool) th.join();
        }
        for (const double f : fids) {
            sum += f;
            const double d = f - res.ideal_fidelity;
            sum_sq_dev += d * d;
        }
        const double mean = sum / double(p * block);
        const double df = std::abs(mean - res.ideal_fidelity);
        res.runs.push_back(p * block);
        res.mean_fidelity.push_back(mean);
        res.log10_dF.push_back(std::log10(std::max(df, 1e-300)));
        res.final_dF = df;
        res.rms_deviation = std::sqrt(sum_sq_dev / double(p * block));
        res.p_stop = p;
        if (p > 1 && std::abs(mean - prev_mean) < 1e-5) {
            if (++settled >= 10) {
                res.converged = true;
                break;
            }
        } else {
            settled = 0;
        }
        prev_mean = mean;
    }
    return res;
}

DecoherenceResult decoherence_run(const AnsatzParams& trained, const GateSpec& gate,
                                  const PhysicalParams& pp, double gamma,
                                  double gamma_phi, int n_slices) {
    if (gate.dim != 2) throw DimensionMismatch("decoherence_run: single-qubit gate");
    const ControlPath path = forward_grid(trained, n_slices + 1);
    DriveFields f = omega_from_path(path);
    drive_from_omega(f, pp);
    const SubspaceProjector proj = cat_states(pp);
    const Eigen::MatrixXcd rho0 = proj.cplus * proj.cplus.adjoint();
    const Eigen::MatrixXcd rho =
        lindblad_evolve(pp, f, rho0, gamma, gamma_phi, path.t);
    DecoherenceResult r;
    r.trace_drift = std::abs(rho.trace().real() - 1.0) + std::abs(rho.trace().imag());
    r.fidelity = state_fidelity(rho, gate.U, Eigen::Vector2cd(1.0, 0.0), proj);
    return r;
}

}  // namespace catgate
