#pragma once

#include <complex>
#include <stdexcept>

namespace catgate {

// Angular frequencies in rad/us, times in us, hbar = 1.

struct PhysicalParams {
    std::complex<double> alpha{0.5, 0.0};  // coherent amplitude, dimensionless
    double K = 78.53981633974483;          // Kerr nonlinearity (2*pi*12.5)
    double epsilon2 = 0.25 * 78.53981633974483;  // two-photon drive, K*|alpha|^2
    double xi = 0.0;                       // two-photon drive phase
    double T = 1.0;                        // gate duration
    int fock_cutoff = 10;

    // epsilon2 must equal K*|alpha|^2 (alpha = sqrt(epsilon2/K) e^{i xi});
    // the Fock cutoff must leave coherent tail mass below 1e-10.
    void validate() const;
};

PhysicalParams default_params();

class ParamError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class TailTooHeavy : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace catgate
