#include <doctest.h>

#include <cmath>
#include <complex>

#include "catgate/cat_core.hpp"
#include "catgate/circuits.hpp"
#include "catgate/control_law.hpp"
#include "catgate/propagator.hpp"

using namespace catgate;
using std::complex;

namespace {
constexpr double kPi = 3.14159265358979323846;
const complex<double> kI{0.0, 1.0};
}  // namespace

TEST_CASE("two-mode drive coefficients obey the fixed ratios") {
    const PhysicalParams pp = default_params();
    const ControlPath cp = trig_path(0.0, 0.0, 2.31253, 1.0, 201);
    const DriveFields f = omega_from_path(cp);
    const TwoQubitDrive d = two_qubit_drive_from_omega(f, cp.t, pp);
    REQUIRE(d.chi12.size() == f.size());
    REQUIRE(d.t.size() == f.size());

    // per-unit-Omega_z cross-Kerr at |alpha| = 0.5
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (std::abs(f.oz[i]) > 1e-8) {
            CHECK(d.chi12[i] / f.oz[i] ==
                  doctest::Approx(-2.172322539261).epsilon(1e-9));
        }
        CHECK(d.chi1[i] == doctest::Approx(-0.540988353435 * d.chi12[i]));
        CHECK(d.chi2[i] == doctest::Approx(-0.061229665601 * d.chi12[i]));
        // eps = -|alpha|^2 (N-/N+) lambda
        const auto [np, nm] = normalization_constants(pp.alpha);
        const complex<double> expect = -0.25 * (nm / np) * d.lambda[i];
        CHECK(std::abs(d.eps[i] - expect) < 1e-12);
    }

    // linear-drive magnitude against the xi = 0 closed form
    const auto [np, nm] = normalization_constants(pp.alpha);
    const double pref =
        std::pow(np * nm, 1.5) / (4.0 * (np * np - nm * nm) * std::pow(0.5, 3));
    for (std::size_t i = 0; i < f.size(); ++i) {
        CHECK(d.lambda[i].real() == doctest::Approx(pref * f.ox[i]).epsilon(1e-9));
        CHECK(d.lambda[i].imag() ==
              doctest::Approx(pref * std::exp(0.5) * f.oy[i]).epsilon(1e-9));
    }
}

TEST_CASE("embedding places a gate on the requested wires") {
    Eigen::Matrix2cd X;
    X << 0, 1, 1, 0;
    // wire 0 is the most significant bit of the state index
    const Eigen::MatrixXcd U0 = embed(X, {0}, 2);
    CHECK(std::abs(U0(0, 2) - 1.0) < 1e-15);
    CHECK(std::abs(U0(1, 3) - 1.0) < 1e-15);
    const Eigen::MatrixXcd U1 = embed(X, {1}, 2);
    CHECK(std::abs(U1(0, 1) - 1.0) < 1e-15);
    CHECK(std::abs(U1(2, 3) - 1.0) < 1e-15);

    // two-qubit embedding: control on wire 2, target on wire 0
    const Eigen::Matrix4cd cx = controlled_unitary(X);
    const Eigen::MatrixXcd W = embed(cx, {2, 0}, 3);
    CHECK(W.rows() == 8);
    // |c t1 t2> with control = wire 2 (LSB): 001 -> 101, 011 -> 111
    CHECK(std::abs(W(5, 1) - 1.0) < 1e-15);
    CHECK(std::abs(W(7, 3) - 1.0) < 1e-15);
    CHECK(std::abs(W(0, 0) - 1.0) < 1e-15);
    CHECK((W * W.adjoint() - Eigen::MatrixXcd::Identity(8, 8)).norm() < 1e-14);
}

TEST_CASE("composition multiplies in time order") {
    Eigen::Matrix2cd A, B;
    A << 1, 2, 3, 4;
    B << 0, 1, 1, 0;
    Circuit c;
    c.n_qubits = 1;
    c.gates.push_back({A, {0}, "A"});
    c.gates.push_back({B, {0}, "B"});
    const Eigen::MatrixXcd M = compose(c);
    CHECK((M - B * A).norm() < 1e-14);
}

TEST_CASE("controlled unitary acts only in the odd-cat control block") {
    Eigen::Matrix2cd S;
    S << 1, 0, 0, kI;
    const Eigen::Matrix4cd cu = controlled_unitary(S);
    CHECK((cu.block<2, 2>(0, 0) - Eigen::Matrix2cd::Identity()).norm() < 1e-15);
    CHECK((cu.block<2, 2>(2, 2) - S).norm() < 1e-15);
    CHECK(cu.block<2, 2>(0, 2).norm() < 1e-15);
}

TEST_CASE("toffoli skeleton reproduces the modified target up to a global phase") {
    // exact holonomy pieces
    const GateSpec t = named_gate("T"), td = named_gate("Tdag"), h = named_gate("H"),
                   x = named_gate("X");
    const Eigen::Matrix4cd cn = controlled_unitary(x.U);
    const Circuit c = toffoli_circuit(t.U, td.U, h.U, cn);
    CHECK(c.gates.size() == 15);
    const Eigen::MatrixXcd C = compose(c);

    const GateSpec tof = named_gate("Toffoli_mod");
    // determinant obstruction: no global phase can make them equal entrywise
    CHECK(std::abs(C.determinant() - 1.0) < 1e-10);
    CHECK(std::abs(tof.U.determinant() + 1.0) < 1e-10);

    // phase alignment removes the mismatch completely
    CHECK(phase_aligned_distance(C, tof.U) < 1e-10);
    CHECK((C - tof.U).norm() > 0.1);
    const complex<double> tr = (tof.U.adjoint() * C).trace();
    CHECK(std::arg(tr) == doctest::Approx(7.0 * kPi / 8.0).epsilon(1e-10));

    CHECK(circuit_average_fidelity(c, tof) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("quadrature-seeded pieces give the known composite fidelity") {
    // closed-form holonomies at the seed amplitudes, exact rotation angles
    auto piece = [](double mu0, double eta0, double lam) {
        return holonomy_unitary(mu0, eta0, theta_fresnel(mu0, lam));
    };
    const Eigen::Matrix2cd t = piece(0.0, 0.0, 2.34014);
    const Eigen::Matrix2cd td = piece(0.0, 0.0, 0.69526);
    const Eigen::Matrix2cd h = piece(kPi / 4.0, kPi / 2.0, 0.38667);
    const Eigen::Matrix2cd x = piece(1.5 * kPi, kPi / 2.0, 0.80891);
    const Circuit c = toffoli_circuit(t, td, h, controlled_unitary(x));
    const double f = circuit_average_fidelity(c, named_gate("Toffoli_mod"));
    CHECK(f == doctest::Approx(0.516892).epsilon(0.01));
}
