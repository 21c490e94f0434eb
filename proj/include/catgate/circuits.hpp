#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "catgate/control_law.hpp"
#include "catgate/fidelity.hpp"
#include "catgate/params.hpp"

namespace catgate {

// Coefficients of the two-mode control Hamiltonian
//   chi12 n1 n2 + n1 (lam^* a2 + lam a2^dag) + eps^* a2 + eps a2^dag
//   + chi1 n1 + chi2 n2
// realizing |C+><C+| (x) I + |C-><C-| (x) U_s.
struct TwoQubitDrive {
    std::vector<double> t;
    std::vector<double> chi12, chi1, chi2;
    std::vector<std::complex<double>> lambda, eps;
};

TwoQubitDrive two_qubit_drive_from_omega(const DriveFields& f,
                                         const std::vector<double>& tgrid,
                                         const PhysicalParams& pp);

// 4x4 controlled gate in the ordered product basis {C+,C-} (x) {C+,C-}.
Eigen::Matrix4cd controlled_unitary(const Eigen::Matrix2cd& target);

struct CircuitElement {
    Eigen::MatrixXcd U;      // 2x2 or 4x4
    std::vector<int> wires;  // wire 0 = most significant qubit
    std::string label;
};

struct Circuit {
    int n_qubits = 3;
    std::vector<CircuitElement> gates;
};

Eigen::MatrixXcd embed(const Eigen::MatrixXcd& U, const std::vector<int>& wires,
                       int n_qubits);
// Gates listed in time order; element k acts after element k-1.
Eigen::MatrixXcd compose(const Circuit& c);

// Decomposition of the modified Toffoli into H, T, Tdag and the modified
// CNOT; the slot assignment is frozen (see tests for the phase convention).
Circuit toffoli_circuit(const Eigen::Matrix2cd& T, const Eigen::Matrix2cd& Tdag,
                        const Eigen::Matrix2cd& H, const Eigen::Matrix4cd& CN);

// Global-phase-aligned distance: min over phase of ||e^{i phi} A - B||_F.
double phase_aligned_distance(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B);

double circuit_average_fidelity(const Circuit& c, const GateSpec& ideal);

}  // namespace catgate
