#include "catgate/cat_core.hpp"

#include <cmath>

namespace catgate {

void PhysicalParams::validate() const {
    const double a2 = std::norm(alpha);
    if (std::abs(epsilon2 - K * a2) > 1e-9 * std::max(1.0, K * a2)) {
        throw ParamError("epsilon2 != K*|alpha|^2");
    }
    if (fock_cutoff < 1) throw ParamError("fock_cutoff < 1");
    coherent_fock(alpha, fock_cutoff);  // throws TailTooHeavy if cutoff too small
}

PhysicalParams default_params() {
    PhysicalParams p;
    p.validate();
    return p;
}

std::pair<double, double> normalization_constants(std::complex<double> alpha) {
    const double e = std::exp(-2.0 * std::norm(alpha));
    return {2.0 + 2.0 * e, 2.0 - 2.0 * e};
}

FockVector coherent_fock(std::complex<double> alpha, int cutoff) {
    FockVector v(cutoff + 1);
    // c[n] = c[n-1] * alpha / sqrt(n), c[0] = e^{-|a|^2/2}
    std::complex<double> c = std::exp(-0.5 * std::norm(alpha));
    for (int n = 0; n <= cutoff; ++n) {
        v[n] = c;
        c *= alpha / std::sqrt(double(n + 1));
    }
    const double tail = 1.0 - v.squaredNorm();
    if (tail >= 1e-10) throw TailTooHeavy("coherent tail mass beyond cutoff >= 1e-10");
    return v;
}

SubspaceProjector cat_states(const PhysicalParams& params) {
    const auto [np, nm] = normalization_constants(params.alpha);
    const FockVector a = coherent_fock(params.alpha, params.fock_cutoff);
    const FockVector b = coherent_fock(-params.alpha, params.fock_cutoff);
    SubspaceProjector s;
    s.cplus = (a + b) / std::sqrt(np);
    s.cminus = (a - b) / std::sqrt(nm);
    return s;
}

Eigen::MatrixXcd SubspaceProjector::basis() const {
    Eigen::MatrixXcd m(cplus.size(), 2);
    m.col(0) = cplus;
    m.col(1) = cminus;
    return m;
}

Eigen::MatrixXcd annihilation_op(int cutoff) {
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(cutoff + 1, cutoff + 1);
    for (int n = 1; n <= cutoff; ++n) a(n - 1, n) = std::sqrt(double(n));
    return a;
}

Eigen::MatrixXcd build_hcat(const PhysicalParams& params) {
    const int d = params.fock_cutoff + 1;
    const Eigen::MatrixXcd a = annihilation_op(params.fock_cutoff);
    const Eigen::MatrixXcd ad = a.adjoint();
    const std::complex<double> ph = std::exp(std::complex<double>(0.0, 2.0 * params.xi));
    Eigen::MatrixXcd h = -params.K * (ad * ad * a * a) +
                         params.epsilon2 * (ph * ad * ad + std::conj(ph) * a * a);
    // numerical symmetrization keeps Hermiticity at machine precision
    h = 0.5 * (h + Eigen::MatrixXcd(h.adjoint()));
    (void)d;
    return h;
}

}  // namespace catgate
