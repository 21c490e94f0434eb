#include "catgate/circuits.hpp"

#include <cmath>

#include "catgate/cat_core.hpp"

namespace catgate {

TwoQubitDrive two_qubit_drive_from_omega(const DriveFields& f,
                                         const std::vector<double>& tgrid,
                                         const PhysicalParams& pp) {
    const auto [np_, nm_] = normalization_constants(pp.alpha);
    const double np2 = np_ * np_, nm2 = nm_ * nm_;
    const double a2 = std::norm(pp.alpha);
    const double a = std::sqrt(a2);
    const double asym = std::exp(2.0 * a2);
    const double cxi = std::cos(pp.xi), sxi = std::sin(pp.xi);
    const double chi12_fac = -2.0 * np2 * nm2 / (a2 * a2 * (np2 - nm2) * (np2 - nm2));
    const double chi1_fac = -a2 * (np2 + nm2) / (2.0 * np_ * nm_);
    const double chi2_fac = -a2 * nm_ / np_;
    const double lam_fac =
        std::pow(np_ * nm_, 1.5) / (4.0 * (np2 - nm2) * a2 * a);
    const double eps_fac = -a2 * nm_ / np_;

    TwoQubitDrive d;
    d.t = tgrid;
    const std::size_t n = f.size();
    d.chi12.resize(n);
    d.chi1.resize(n);
    d.chi2.resize(n);
    d.lambda.resize(n);
    d.eps.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        d.chi12[i] = chi12_fac * f.oz[i];
        d.chi1[i] = chi1_fac * d.chi12[i];
        d.chi2[i] = chi2_fac * d.chi12[i];
        const double re = lam_fac * (f.ox[i] * cxi - f.oy[i] * asym * sxi);
        const double im = lam_fac * (f.ox[i] * sxi + f.oy[i] * asym * cxi);
        d.lambda[i] = {re, im};
        d.eps[i] = eps_fac * d.lambda[i];
    }
    return d;
}

Eigen::Matrix4cd controlled_unitary(const Eigen::Matrix2cd& target) {
    Eigen::Matrix4cd u = Eigen::Matrix4cd::Identity();
    u.block<2, 2>(2, 2) = target;
    return u;
}

Eigen::MatrixXcd embed(const Eigen::MatrixXcd& U, const std::vector<int>& wires,
                       int n_qubits) {
    const int dim = 1 << n_qubits;
    const int k = int(wires.size());
    if (U.rows() != (1 << k)) throw DimensionMismatch("embed: wire count vs gate size");
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    // wire w reads bit (n_qubits - 1 - w); wires[0] is the gate's top qubit
    auto sub_index = [&](int full) {
        int s = 0;
        for (int q = 0; q < k; ++q)
            s = (s << 1) | ((full >> (n_qubits - 1 - wires[q])) & 1);
        return s;
    };
    auto rest_mask = [&](int full) {
        int r = full;
        for (int q = 0; q < k; ++q) r &= ~(1 << (n_qubits - 1 - wires[q]));
        return r;
    };
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            if (rest_mask(i) == rest_mask(j)) out(i, j) = U(sub_index(i), sub_index(j));
    return out;
}

Eigen::MatrixXcd compose(const Circuit& c) {
    const int dim = 1 << c.n_qubits;
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
    for (const auto& g : c.gates) u = embed(g.U, g.wires, c.n_qubits) * u;
    return u;
}

Circuit toffoli_circuit(const Eigen::Matrix2cd& T, const Eigen::Matrix2cd& Tdag,
                        const Eigen::Matrix2cd& H, const Eigen::Matrix4cd& CN) {
    Circuit c;
    c.n_qubits = 3;
    auto g1 = [&](const Eigen::Matrix2cd& u, int w, const char* lbl) {
        c.gates.push_back({u, {w}, lbl});
    };
    auto g2 = [&](int ctrl, int tgt) {
        c.gates.push_back({CN, {ctrl, tgt}, "CN"});
    };
    g1(H, 2, "H");
    g2(1, 2);
    g1(Tdag, 2, "Tdag");
    g2(0, 2);
    g1(T, 2, "T");
    g2(1, 2);
    g1(Tdag, 2, "Tdag");
    g2(0, 2);
    g1(T, 1, "T");
    g1(T, 2, "T");
    g1(H, 2, "H");
    g2(0, 1);
    g1(T, 0, "T");
    g1(Tdag, 1, "Tdag");
    g2(0, 1);
    return c;
}

double phase_aligned_distance(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B) {
    const std::complex<double> c = (A.adjoint() * B).trace();
    const double d2 = A.squaredNorm() + B.squaredNorm() - 2.0 * std::abs(c);
    return std::sqrt(std::max(0.0, d2));
}

double circuit_average_fidelity(const Circuit& c, const GateSpec& ideal) {
    return average_fidelity(ideal.U, compose(c));
}

}  // namespace catgate
