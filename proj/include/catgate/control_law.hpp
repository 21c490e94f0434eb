#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "catgate/params.hpp"

namespace catgate {

// Time grid with the control angles and their exact time derivatives.
// t is strictly increasing with t.front() = 0 and t.back() = L.
struct ControlPath {
    std::vector<double> t;
    std::vector<double> mu, eta;
    std::vector<double> dmu, deta;
    double L = 1.0;

    std::size_t size() const { return t.size(); }
    // (|mu(L)-mu(0)|, |eta(L)-eta(0)| reduced mod 2*pi); zero for cyclic paths
    std::pair<double, double> cyclic_defect() const;
};

// Effective subspace fields and the physical drives realizing them.
struct DriveFields {
    std::vector<double> ox, oy, oz;            // rad/us
    std::vector<double> chi;                   // Kerr-shift drive
    std::vector<std::complex<double>> eps;     // single-photon drive
    bool gap_warning = false;                  // max drive above 10% of 4K|alpha|^2

    std::size_t size() const { return ox.size(); }
};

class SingularSecant : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Omega_x = (1/4)[eta' sin(eta) sin(2mu) - 2 mu' cos(eta)]
// Omega_y = (1/4)[eta' cos(eta) sin(2mu) + 2 mu' sin(eta)]
// Omega_z = -(1/2) eta' sin^2(mu)
DriveFields omega_from_path(const ControlPath& path);

// Fills chi and eps from the omega arrays; sets gap_warning.
void drive_from_omega(DriveFields& fields, const PhysicalParams& params);

// Phi_pm = -/+ integral (eta' sin^2(mu)/2 + Omega_z) sec(mu) dt.
// Vanishes identically when Omega_z comes from omega_from_path.
std::pair<double, double> dynamic_phase(const ControlPath& path, const DriveFields& fields);

// theta = integral eta' sin^2(mu/2) dt (composite trapezoid)
double geometric_theta(const ControlPath& path);

// mu = mu0 + Lambda sin^2(pi t/L), eta = eta0 + pi (1 - cos(pi t/L)), n grid points
ControlPath trig_path(double mu0, double eta0, double Lambda, double L, int n);

// Unnormalized Fresnel kernels, |error| < 1e-10.
double fresnel_S(double x);  // int_0^x sin(t^2) dt
double fresnel_C(double x);  // int_0^x cos(t^2) dt

// Closed-form theta for the trig path. Lambda = 0 returns the analytic limit
// pi(1 - cos mu0); Lambda < 0 is a domain error.
double theta_fresnel(double mu0, double Lambda);

// zeta = (sin(eta)sin(mu), cos(eta)sin(mu), cos(mu)) per grid point
std::array<std::vector<double>, 3> zeta_path(const ControlPath& path);

struct BlochTrajectories {
    std::vector<std::array<double, 3>> rplus, rminus;  // antipodal unit vectors
};
BlochTrajectories bloch_trajectories(const ControlPath& path);

}  // namespace catgate
