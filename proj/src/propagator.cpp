#include "catgate/propagator.hpp"

#include <cmath>
#include <complex>

namespace catgate {

namespace {

using Eigen::Matrix2cd;
using Eigen::MatrixXcd;
const std::complex<double> kI(0.0, 1.0);

Matrix2cd pauli(int k) {
    Matrix2cd m;
    switch (k) {
        case 0: m << 0, 1, 1, 0; break;
        case 1: m << 0, -kI, kI, 0; break;
        default: m << 1, 0, 0, -1; break;
    }
    return m;
}

// sin(x)/x and (x cos x - sin x)/x^3 with series guards
double sinc_x(double x) {
    if (std::abs(x) < 1e-4) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

double gfun(double x) {
    if (std::abs(x) < 1e-4) {
        const double x2 = x * x;
        return -1.0 / 3.0 + x2 / 30.0 - x2 * x2 / 840.0;
    }
    return (x * std::cos(x) - std::sin(x)) / (x * x * x);
}

Matrix2cd vdotsigma(const std::array<double, 3>& v) {
    Matrix2cd m;
    m << v[2], std::complex<double>(v[0], -v[1]),
         std::complex<double>(v[0], v[1]), -v[2];
    return m;
}

}  // namespace

Eigen::Matrix2cd su2_step(const std::array<double, 3>& v) {
    const double x = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    return std::cos(x) * Matrix2cd::Identity() - kI * sinc_x(x) * vdotsigma(v);
}

std::array<Eigen::Matrix2cd, 3> su2_step_derivatives(const std::array<double, 3>& v) {
    const double x = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    const double sc = sinc_x(x);
    const double g = gfun(x);
    const Matrix2cd vs = vdotsigma(v);
    std::array<Matrix2cd, 3> d;
    for (int k = 0; k < 3; ++k)
        d[k] = -sc * v[k] * Matrix2cd::Identity() - kI * (g * v[k] * vs + sc * pauli(k));
    return d;
}

UnitarySequence evolve_subspace(const DriveFields& f, const std::vector<double>& tgrid) {
    const std::size_t n = tgrid.size();
    UnitarySequence seq;
    seq.cumulative.reserve(n);
    seq.step.reserve(n - 1);
    MatrixXcd U = Matrix2cd::Identity();
    seq.cumulative.push_back(U);
    for (std::size_t j = 0; j + 1 < n; ++j) {
        const double dt = tgrid[j + 1] - tgrid[j];
        const std::array<double, 3> v = {0.5 * (f.ox[j] + f.ox[j + 1]) * dt,
                                         0.5 * (f.oy[j] + f.oy[j + 1]) * dt,
                                         0.5 * (f.oz[j] + f.oz[j + 1]) * dt};
        const Matrix2cd S = su2_step(v);
        U = S * U;
        seq.step.push_back(S);
        seq.cumulative.push_back(U);
    }
    return seq;
}

namespace {

// H(t) = H_cat + chi a^dag a + eps a^dag + eps^* a on the truncated basis
MatrixXcd control_ham(const MatrixXcd& hcat, const MatrixXcd& a, const MatrixXcd& num,
                      double chi, std::complex<double> eps) {
    return hcat + chi * num + eps * a.adjoint() + std::conj(eps) * a;
}

}  // namespace

UnitarySequence evolve_fock(const PhysicalParams& pp, const DriveFields& f,
                            const std::vector<double>& tgrid) {
    const MatrixXcd hcat = build_hcat(pp);
    const MatrixXcd a = annihilation_op(pp.fock_cutoff);
    const MatrixXcd num = a.adjoint() * a;
    const std::size_t n = tgrid.size();
    const int d = pp.fock_cutoff + 1;

    UnitarySequence seq;
    seq.cumulative.reserve(n);
    seq.step.reserve(n - 1);
    MatrixXcd U = MatrixXcd::Identity(d, d);
    seq.cumulative.push_back(U);
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es;
    for (std::size_t j = 0; j + 1 < n; ++j) {
        const double dt = tgrid[j + 1] - tgrid[j];
        const double chi = 0.5 * (f.chi[j] + f.chi[j + 1]);
        const std::complex<double> eps = 0.5 * (f.eps[j] + f.eps[j + 1]);
        es.compute(control_ham(hcat, a, num, chi, eps));
        const MatrixXcd phase =
            (-kI * dt * es.eigenvalues().array().cast<std::complex<double>>())
                .exp()
                .matrix()
                .asDiagonal();
        const MatrixXcd S = es.eigenvectors() * phase * es.eigenvectors().adjoint();
        U = S * U;
        seq.step.push_back(S);
        seq.cumulative.push_back(U);
    }
    return seq;
}

namespace {

struct LindbladOps {
    MatrixXcd hcat, a, adag, num, num2;
    double gamma = 0.0, gamma_phi = 0.0;
};

MatrixXcd lindblad_rhs(const LindbladOps& ops, const MatrixXcd& rho, double chi,
                       std::complex<double> eps) {
    const MatrixXcd h = control_ham(ops.hcat, ops.a, ops.num, chi, eps);
    MatrixXcd r = -kI * (h * rho - rho * h);
    if (ops.gamma != 0.0)
        r += ops.gamma * (ops.a * rho * ops.adag -
                          0.5 * (ops.num * rho + rho * ops.num));
    if (ops.gamma_phi != 0.0)
        r += ops.gamma_phi * (ops.num * rho * ops.num -
                              0.5 * (ops.num2 * rho + rho * ops.num2));
    return r;
}

MatrixXcd lindblad_run(const LindbladOps& ops, const DriveFields& f,
                       const MatrixXcd& rho0, const std::vector<double>& tgrid,
                       int substeps) {
    MatrixXcd rho = rho0;
    for (std::size_t j = 0; j + 1 < tgrid.size(); ++j) {
        const double dt = tgrid[j + 1] - tgrid[j];
        const double h = dt / substeps;
        const double dchi = f.chi[j + 1] - f.chi[j];
        const std::complex<double> deps = f.eps[j + 1] - f.eps[j];
        for (int s = 0; s < substeps; ++s) {
            // linear interpolation of the drive inside the slice
            const double f0 = double(s) / substeps;
            const double fh = (double(s) + 0.5) / substeps;
            const double f1 = double(s + 1) / substeps;
            const MatrixXcd k1 = lindblad_rhs(ops, rho, f.chi[j] + f0 * dchi,
                                              f.eps[j] + f0 * deps);
            const MatrixXcd k2 = lindblad_rhs(ops, rho + 0.5 * h * k1,
                                              f.chi[j] + fh * dchi, f.eps[j] + fh * deps);
            const MatrixXcd k3 = lindblad_rhs(ops, rho + 0.5 * h * k2,
                                              f.chi[j] + fh * dchi, f.eps[j] + fh * deps);
            const MatrixXcd k4 = lindblad_rhs(ops, rho + h * k3, f.chi[j] + f1 * dchi,
                                              f.eps[j] + f1 * deps);
            rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        }
    }
    return rho;
}

}  // namespace

Eigen::MatrixXcd lindblad_evolve(const PhysicalParams& pp, const DriveFields& f,
                                 const Eigen::MatrixXcd& rho0, double gamma,
                                 double gamma_phi, const std::vector<double>& tgrid) {
    LindbladOps ops;
    ops.hcat = build_hcat(pp);
    ops.a = annihilation_op(pp.fock_cutoff);
    ops.adag = ops.a.adjoint();
    ops.num = ops.adag * ops.a;
    ops.num2 = ops.num * ops.num;
    ops.gamma = gamma;
    ops.gamma_phi = gamma_phi;

    // explicit-RK4 stability: |lambda| h below ~1.5 for the stiffest corner
    // mode of the truncated generator
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(ops.hcat);
    double hnorm = es.eigenvalues().cwiseAbs().maxCoeff();
    double chimax = 0.0, epsmax = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        chimax = std::max(chimax, std::abs(f.chi[i]));
        epsmax = std::max(epsmax, std::abs(f.eps[i]));
    }
    const int cut = pp.fock_cutoff;
    const double bound = hnorm + chimax * cut + 2.0 * epsmax * std::sqrt(cut + 1.0) +
                         gamma * (cut + 1.0) + gamma_phi * double(cut + 1) * (cut + 1);
    double dtmax = 0.0;
    for (std::size_t j = 0; j + 1 < tgrid.size(); ++j)
        dtmax = std::max(dtmax, tgrid[j + 1] - tgrid[j]);
    int substeps = std::max(1, int(std::ceil(bound * dtmax / 1.5)));

    for (int attempt = 0; attempt < 2; ++attempt) {
        const MatrixXcd rho = lindblad_run(ops, f, rho0, tgrid, substeps);
        const double drift = std::abs(rho.trace().real() - 1.0) +
                             std::abs(rho.trace().imag());
        if (std::isfinite(drift) && drift <= 1e-4) return rho;
        substeps *= 4;
    }
    throw StepUnstable("lindblad_evolve: trace drift persists, reduce the slice width");
}

std::vector<double> uniform_grid(double L, int n_slices) {
    std::vector<double> t(n_slices + 1);
    for (int i = 0; i <= n_slices; ++i) t[i] = L * double(i) / double(n_slices);
    return t;
}

}  // namespace catgate
