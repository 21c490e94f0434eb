#include "catgate/fidelity.hpp"

#include <cmath>

namespace catgate {

namespace {
constexpr double kPi = 3.14159265358979323846;
const std::complex<double> kI(0.0, 1.0);
}  // namespace

Eigen::Matrix2cd holonomy_unitary(double mu0, double eta0, double theta) {
    const double ct = std::cos(theta), st = std::sin(theta);
    const double cm = std::cos(mu0), sm = std::sin(mu0);
    const std::complex<double> ph = std::exp(kI * eta0);
    Eigen::Matrix2cd u;
    u << ct + kI * cm * st, ph * sm * st,
        -std::conj(ph) * sm * st, ct - kI * cm * st;
    return u;
}

GateSpec target_from_angles(double mu0, double eta0, double theta) {
    GateSpec g;
    g.name = "custom";
    g.dim = 2;
    g.U = holonomy_unitary(mu0, eta0, theta);
    g.mu0 = mu0;
    g.eta0 = eta0;
    g.theta_ideal = theta;
    g.has_angles = true;
    return g;
}

GateSpec named_gate(const std::string& name) {
    if (name == "T") {
        GateSpec g = target_from_angles(0.0, 0.0, 7.0 * kPi / 8.0);
        g.name = name;
        return g;
    }
    if (name == "Tdag") {
        GateSpec g = target_from_angles(0.0, 0.0, kPi / 8.0);
        g.name = name;
        return g;
    }
    if (name == "X") {
        GateSpec g = target_from_angles(1.5 * kPi, 0.5 * kPi, 0.5 * kPi);
        g.name = name;
        return g;
    }
    if (name == "H") {
        GateSpec g = target_from_angles(0.25 * kPi, 0.5 * kPi, 0.5 * kPi);
        g.name = name;
        return g;
    }
    if (name == "Rx_pi4") {
        GateSpec g = target_from_angles(0.5 * kPi, -0.5 * kPi, 9.0 * kPi / 8.0);
        g.name = name;
        return g;
    }
    if (name == "CNOTmod") {
        // control in the cat basis, conditional branch = the X entry above
        GateSpec x = named_gate("X");
        GateSpec g;
        g.name = name;
        g.dim = 4;
        g.U = Eigen::Matrix4cd::Identity();
        g.U.block<2, 2>(2, 2) = x.U;
        g.mu0 = x.mu0;
        g.eta0 = x.eta0;
        g.theta_ideal = x.theta_ideal;
        g.has_angles = true;
        return g;
    }
    if (name == "Toffoli_mod") {
        GateSpec g;
        g.name = name;
        g.dim = 8;
        Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(8, 8);
        u(0, 0) = 1;
        u(1, 1) = 1;
        u(2, 2) = -1;
        u(3, 3) = -1;
        u(4, 4) = 1;
        u(5, 5) = 1;
        u(6, 7) = -1;
        u(7, 6) = -1;
        g.U = u;
        return g;
    }
    throw UnknownGate("named_gate: " + name);
}

double average_fidelity(const Eigen::MatrixXcd& ideal, const Eigen::MatrixXcd& actual) {
    if (ideal.rows() != actual.rows() || ideal.cols() != actual.cols() ||
        ideal.rows() != ideal.cols())
        throw DimensionMismatch("average_fidelity: shape mismatch");
    const double d = double(ideal.rows());
    const Eigen::MatrixXcd m = ideal.adjoint() * actual;
    const double tmm = (m * m.adjoint()).trace().real();
    const double tm = std::norm(m.trace());
    return (tmm + tm) / (d * (d + 1.0));
}

double average_fidelity_projected(const Eigen::MatrixXcd& ideal2,
                                  const Eigen::MatrixXcd& fock_U,
                                  const SubspaceProjector& proj) {
    const Eigen::MatrixXcd b = proj.basis();
    if (fock_U.rows() != b.rows())
        throw DimensionMismatch("average_fidelity_projected: Fock dimension");
    const Eigen::MatrixXcd sub = b.adjoint() * fock_U * b;
    return average_fidelity(ideal2, sub);
}

double state_fidelity(const Eigen::MatrixXcd& rho, const Eigen::MatrixXcd& ideal,
                      const Eigen::VectorXcd& psi_in) {
    if (rho.rows() != ideal.rows() || psi_in.size() != ideal.cols())
        throw DimensionMismatch("state_fidelity: shape mismatch");
    const Eigen::VectorXcd psi = ideal * psi_in;
    return (psi.adjoint() * rho * psi)(0, 0).real();
}

double state_fidelity(const Eigen::MatrixXcd& rho_fock, const Eigen::MatrixXcd& ideal2,
                      const Eigen::Vector2cd& psi_in_sub, const SubspaceProjector& proj) {
    const Eigen::MatrixXcd b = proj.basis();
    if (rho_fock.rows() != b.rows())
        throw DimensionMismatch("state_fidelity: Fock dimension");
    const Eigen::VectorXcd psi = b * (ideal2 * psi_in_sub);
    return (psi.adjoint() * rho_fock * psi)(0, 0).real();
}

}  // namespace catgate
