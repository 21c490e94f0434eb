#pragma once

#include <Eigen/Dense>
#include <complex>
#include <utility>

#include "catgate/params.hpp"

namespace catgate {

using FockVector = Eigen::VectorXcd;  // length fock_cutoff + 1, unit norm for states

// Orthonormal cat pair spanning the computational subspace.
struct SubspaceProjector {
    FockVector cplus;   // even cat |C+>
    FockVector cminus;  // odd cat |C->
    Eigen::MatrixXcd basis() const;  // (cutoff+1) x 2, columns (|C+>, |C->)
};

// N± = 2 ± 2 exp(-2|alpha|^2)
std::pair<double, double> normalization_constants(std::complex<double> alpha);

// coeffs[n] = e^{-|a|^2/2} a^n / sqrt(n!), throws TailTooHeavy if the cutoff
// truncates more than 1e-10 of the mass.
FockVector coherent_fock(std::complex<double> alpha, int cutoff);

SubspaceProjector cat_states(const PhysicalParams& params);

// H_cat = -K a†²a² + eps2 (e^{2i xi} a†² + e^{-2i xi} a²), truncated Fock basis.
Eigen::MatrixXcd build_hcat(const PhysicalParams& params);

// Ladder operator a on the truncated basis.
Eigen::MatrixXcd annihilation_op(int cutoff);

}  // namespace catgate
