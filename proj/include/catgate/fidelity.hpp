#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

#include "catgate/cat_core.hpp"

namespace catgate {

// Target gate: either from the holonomy angles (mu0, eta0, theta) via the
// closed-form evolution operator, or a named table entry.
struct GateSpec {
    std::string name;
    int dim = 2;
    Eigen::MatrixXcd U;
    // holonomy angles; valid for the single-qubit entries (dim == 2) and for
    // the conditional branch of CNOTmod
    double mu0 = 0.0, eta0 = 0.0, theta_ideal = 0.0;
    bool has_angles = false;
};

Eigen::Matrix2cd holonomy_unitary(double mu0, double eta0, double theta);
GateSpec target_from_angles(double mu0, double eta0, double theta);

class UnknownGate : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};
class DimensionMismatch : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Named targets: T, Tdag, X, H, Rx_pi4 (single qubit), CNOTmod (two qubit,
// control in the cat basis), Toffoli_mod (three qubit, modified phases).
GateSpec named_gate(const std::string& name);

// F = [Tr(M M^dag) + |Tr M|^2] / (D(D+1)) with M = U_ideal^dag U_actual.
double average_fidelity(const Eigen::MatrixXcd& ideal, const Eigen::MatrixXcd& actual);

// Same, but the actual evolution lives in the oscillator space and is first
// projected onto the cat-state qubit subspace.
double average_fidelity_projected(const Eigen::MatrixXcd& ideal2,
                                  const Eigen::MatrixXcd& fock_U,
                                  const SubspaceProjector& proj);

// <psi_ideal| rho |psi_ideal> with |psi_ideal> = U_ideal |psi_in>, everything
// in one common space.
double state_fidelity(const Eigen::MatrixXcd& rho, const Eigen::MatrixXcd& ideal,
                      const Eigen::VectorXcd& psi_in);
// Fock-space rho against a qubit-space ideal: psi_in_sub is expressed in the
// cat basis and lifted through the projector.
double state_fidelity(const Eigen::MatrixXcd& rho_fock, const Eigen::MatrixXcd& ideal2,
                      const Eigen::Vector2cd& psi_in_sub, const SubspaceProjector& proj);

}  // namespace catgate
