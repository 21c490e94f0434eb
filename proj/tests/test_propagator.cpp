#include <doctest.h>

#include <cmath>
#include <random>

#include "catgate/fidelity.hpp"
#include "catgate/propagator.hpp"

using namespace catgate;

namespace {
constexpr double kPi = 3.14159265358979323846;
const std::complex<double> kI(0.0, 1.0);
}

TEST_CASE("closed-form slice propagator") {
    // pure z rotation
    const Eigen::Matrix2cd sz = su2_step({0.0, 0.0, 0.7});
    CHECK(std::abs(sz(0, 0) - std::exp(-kI * 0.7)) < 1e-14);
    CHECK(std::abs(sz(1, 1) - std::exp(kI * 0.7)) < 1e-14);
    CHECK(std::abs(sz(0, 1)) < 1e-15);
    // pure x rotation
    const Eigen::Matrix2cd sx = su2_step({0.4, 0.0, 0.0});
    CHECK(std::abs(sx(0, 0) - std::cos(0.4)) < 1e-14);
    CHECK(std::abs(sx(0, 1) + kI * std::sin(0.4)) < 1e-14);

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int it = 0; it < 20; ++it) {
        const std::array<double, 3> v = {u(rng), u(rng), u(rng)};
        const Eigen::Matrix2cd s = su2_step(v);
        CHECK((s.adjoint() * s - Eigen::Matrix2cd::Identity()).norm() < 1e-13);
        CHECK(std::abs(s.determinant() - 1.0) < 1e-13);
    }
    // zero step
    CHECK((su2_step({0.0, 0.0, 0.0}) - Eigen::Matrix2cd::Identity()).norm() < 1e-15);
}

TEST_CASE("slice propagator derivatives vs finite differences") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    const double h = 1e-6;
    auto check_at = [&](std::array<double, 3> v) {
        const auto d = su2_step_derivatives(v);
        for (int k = 0; k < 3; ++k) {
            std::array<double, 3> vp = v, vm = v;
            vp[k] += h;
            vm[k] -= h;
            const Eigen::Matrix2cd fd = (su2_step(vp) - su2_step(vm)) / (2 * h);
            CHECK((d[k] - fd).norm() < 1e-8);
        }
    };
    for (int it = 0; it < 10; ++it) check_at({u(rng), u(rng), u(rng)});
    // series branch near zero
    check_at({1e-5, -2e-5, 5e-6});
    check_at({0.0, 0.0, 0.0});
}

TEST_CASE("subspace evolution of a constant field") {
    const int n = 200;
    DriveFields f;
    f.ox.assign(n + 1, 0.0);
    f.oy.assign(n + 1, 0.0);
    f.oz.assign(n + 1, 1.3);
    const UnitarySequence seq = evolve_subspace(f, uniform_grid(1.0, n));
    CHECK(seq.cumulative.size() == n + 1);
    CHECK(seq.step.size() == n);
    const Eigen::Matrix2cd uL = seq.cumulative.back();
    CHECK(std::abs(uL(0, 0) - std::exp(-kI * 1.3)) < 1e-12);
    // per-slice unitarity
    for (const auto& s : seq.step)
        CHECK((s.adjoint() * s - Eigen::MatrixXcd::Identity(2, 2)).norm() < 1e-10);
    // cumulative recursion
    CHECK((seq.cumulative[10] - seq.step[9] * seq.cumulative[9]).norm() < 1e-13);
}

TEST_CASE("Fock evolution without drives reduces to the bare Kerr phase") {
    PhysicalParams pp = default_params();
    const int n = 50;
    DriveFields f;
    f.ox.assign(n + 1, 0.0);
    f.oy.assign(n + 1, 0.0);
    f.oz.assign(n + 1, 0.0);
    f.chi.assign(n + 1, 0.0);
    f.eps.assign(n + 1, {0.0, 0.0});
    const UnitarySequence seq = evolve_fock(pp, f, uniform_grid(1.0, n));
    const Eigen::MatrixXcd h = build_hcat(pp);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    for (int k : {0, 4, 10}) {
        const Eigen::VectorXcd psi = es.eigenvectors().col(k);
        const std::complex<double> expect = std::exp(-kI * es.eigenvalues()[k] * 1.0);
        CHECK((seq.cumulative.back() * psi - expect * psi).norm() < 1e-8);
    }
}

TEST_CASE("Fock evolution of the designed drive stays on the qubit subspace") {
    const PhysicalParams pp = default_params();
    const ControlPath p = trig_path(0.0, 0.0, 2.31253, 1.0, 2001);
    DriveFields f = omega_from_path(p);
    drive_from_omega(f, pp);
    const UnitarySequence fock = evolve_fock(pp, f, p.t);
    const UnitarySequence sub = evolve_subspace(f, p.t);
    const SubspaceProjector proj = cat_states(pp);
    // leakage-inclusive comparison between the full and effective models
    const double fcross = average_fidelity_projected(
        Eigen::MatrixXcd(sub.cumulative.back()), fock.cumulative.back(), proj);
    CHECK(fcross > 0.99);
}

TEST_CASE("Lindblad at zero rates tracks the closed system") {
    const PhysicalParams pp = default_params();
    const ControlPath p = trig_path(0.0, 0.0, 2.31253, 1.0, 501);
    DriveFields f = omega_from_path(p);
    drive_from_omega(f, pp);
    const SubspaceProjector proj = cat_states(pp);
    const Eigen::MatrixXcd rho0 = proj.cplus * proj.cplus.adjoint();
    const Eigen::MatrixXcd rho = lindblad_evolve(pp, f, rho0, 0.0, 0.0, p.t);
    CHECK(std::abs(rho.trace().real() - 1.0) < 1e-10);
    const UnitarySequence fock = evolve_fock(pp, f, p.t);
    const Eigen::VectorXcd psi = fock.cumulative.back() * proj.cplus;
    const double overlap = (psi.adjoint() * rho * psi)(0, 0).real();
    CHECK(overlap > 1.0 - 1e-5);
}

TEST_CASE("Lindblad run keeps the state physical") {
    const PhysicalParams pp = default_params();
    const ControlPath p = trig_path(0.0, 0.0, 2.31253, 1.0, 501);
    DriveFields f = omega_from_path(p);
    drive_from_omega(f, pp);
    const SubspaceProjector proj = cat_states(pp);
    const Eigen::MatrixXcd rho0 = proj.cplus * proj.cplus.adjoint();
    const Eigen::MatrixXcd rho = lindblad_evolve(pp, f, rho0, 0.05, 0.05, p.t);
    CHECK(std::abs(rho.trace().real() - 1.0) < 1e-6);
    CHECK((rho - rho.adjoint()).norm() < 1e-8);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (rho + rho.adjoint()));
    CHECK(es.eigenvalues().minCoeff() > -1e-8);
}
