#pragma once

#include <Eigen/Dense>
#include <array>
#include <stdexcept>
#include <vector>

#include "catgate/cat_core.hpp"
#include "catgate/control_law.hpp"
#include "catgate/params.hpp"

namespace catgate {

struct UnitarySequence {
    std::vector<Eigen::MatrixXcd> step;        // per-slice propagators
    std::vector<Eigen::MatrixXcd> cumulative;  // cumulative[j] = U(t_j), cumulative[0] = I
};

// Closed-form SU(2) slice propagator for v = Omega_mid * dt:
//   S = cos|v| I - i sinc|v| (v . sigma)
Eigen::Matrix2cd su2_step(const std::array<double, 3>& v);
// dS/dv_k, same convention; series guards below x ~ 1e-4
std::array<Eigen::Matrix2cd, 3> su2_step_derivatives(const std::array<double, 3>& v);

// Midpoint-rule evolution of the effective qubit, H_eff = Omega . sigma,
// slice propagator exp(-i Omega_mid . sigma dt).
UnitarySequence evolve_subspace(const DriveFields& f, const std::vector<double>& tgrid);

// Full-oscillator evolution under H_cat + chi a^dag a + eps a^dag + eps^* a,
// midpoint coefficients, exact slice exponential by eigendecomposition.
UnitarySequence evolve_fock(const PhysicalParams& pp, const DriveFields& f,
                            const std::vector<double>& tgrid);

class StepUnstable : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// RK4 Lindblad master equation with single-photon loss (rate gamma) and
// dephasing (rate gamma_phi).  Substep count is chosen from a spectral-norm
// bound of the truncated generator; on trace drift > 1e-4 retries once at
// 4x substeps before throwing StepUnstable.
Eigen::MatrixXcd lindblad_evolve(const PhysicalParams& pp, const DriveFields& f,
                                 const Eigen::MatrixXcd& rho0, double gamma,
                                 double gamma_phi, const std::vector<double>& tgrid);

std::vector<double> uniform_grid(double L, int n_slices);

}  // namespace catgate
