#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "catgate/circuits.hpp"
#include "catgate/io.hpp"
#include "catgate/noise.hpp"
#include "catgate/propagator.hpp"
#include "catgate/trainer.hpp"

namespace py = pybind11;
using namespace catgate;

PYBIND11_MODULE(_catgate, m) {
    m.doc() = "geometric gate engineering on Kerr-cat qubits";

    py::register_exception<ParamError>(m, "ParamError", PyExc_ValueError);
    py::register_exception<TailTooHeavy>(m, "TailTooHeavy", PyExc_ValueError);
    py::register_exception<UnknownGate>(m, "UnknownGate", PyExc_ValueError);
    py::register_exception<DimensionMismatch>(m, "DimensionMismatch", PyExc_ValueError);
    py::register_exception<BadCheckpoint>(m, "BadCheckpoint", PyExc_ValueError);
    py::register_exception<ConvergenceFailure>(m, "ConvergenceFailure",
                                               PyExc_RuntimeError);
    py::register_exception<StepUnstable>(m, "StepUnstable", PyExc_RuntimeError);
    py::register_exception<DivergenceDetected>(m, "DivergenceDetected",
                                               PyExc_RuntimeError);
    py::register_exception<SingularSecant>(m, "SingularSecant", PyExc_RuntimeError);

    py::class_<PhysicalParams>(m, "PhysicalParams")
        .def(py::init<>())
        .def_readwrite("alpha", &PhysicalParams::alpha)
        .def_readwrite("K", &PhysicalParams::K)
        .def_readwrite("epsilon2", &PhysicalParams::epsilon2)
        .def_readwrite("xi", &PhysicalParams::xi)
        .def_readwrite("T", &PhysicalParams::T)
        .def_readwrite("fock_cutoff", &PhysicalParams::fock_cutoff)
        .def("validate", &PhysicalParams::validate);
    m.def("default_params", &default_params);

    m.def("normalization_constants", &normalization_constants, py::arg("alpha"));
    m.def("coherent_fock", &coherent_fock, py::arg("alpha"), py::arg("cutoff"));
    m.def("build_hcat", &build_hcat);

    py::class_<ControlPath>(m, "ControlPath")
        .def_readwrite("t", &ControlPath::t)
        .def_readwrite("mu", &ControlPath::mu)
        .def_readwrite("eta", &ControlPath::eta)
        .def_readwrite("dmu", &ControlPath::dmu)
        .def_readwrite("deta", &ControlPath::deta)
        .def_readwrite("L", &ControlPath::L);

    py::class_<DriveFields>(m, "DriveFields")
        .def_readwrite("ox", &DriveFields::ox)
        .def_readwrite("oy", &DriveFields::oy)
        .def_readwrite("oz", &DriveFields::oz)
        .def_readwrite("chi", &DriveFields::chi)
        .def_readwrite("eps", &DriveFields::eps)
        .def_readonly("gap_warning", &DriveFields::gap_warning);

    m.def("trig_path", &trig_path, py::arg("mu0"), py::arg("eta0"), py::arg("Lambda"),
          py::arg("L"), py::arg("n"));
    m.def("omega_from_path", &omega_from_path);
    m.def("drive_from_omega", &drive_from_omega, py::arg("fields"), py::arg("params"));
    m.def("dynamic_phase", &dynamic_phase);
    m.def("geometric_theta", &geometric_theta);
    m.def("fresnel_S", &fresnel_S);
    m.def("fresnel_C", &fresnel_C);
    m.def("theta_fresnel", &theta_fresnel, py::arg("mu0"), py::arg("Lambda"));

    py::class_<AnsatzParams>(m, "AnsatzParams")
        .def(py::init<>())
        .def_readwrite("n_hidden", &AnsatzParams::n_hidden)
        .def_readwrite("W1", &AnsatzParams::W1)
        .def_readwrite("B1", &AnsatzParams::B1)
        .def_readwrite("phi1", &AnsatzParams::phi1)
        .def_readwrite("W2", &AnsatzParams::W2)
        .def_readwrite("W3", &AnsatzParams::W3)
        .def_readwrite("B3", &AnsatzParams::B3)
        .def_readwrite("phi2", &AnsatzParams::phi2)
        .def_readwrite("W4", &AnsatzParams::W4)
        .def_readwrite("mu0", &AnsatzParams::mu0)
        .def_readwrite("eta0", &AnsatzParams::eta0)
        .def_readwrite("L", &AnsatzParams::L)
        .def("pinned_B2", &AnsatzParams::pinned_B2)
        .def("pinned_B4", &AnsatzParams::pinned_B4);
    m.def("random_ansatz", &random_ansatz, py::arg("n_hidden"), py::arg("mu0"),
          py::arg("eta0"), py::arg("L"), py::arg("seed"));
    m.def("pretrain", &pretrain, py::arg("params"), py::arg("Lambda"), py::arg("iters"),
          py::arg("n_grid") = 1001);
    m.def("forward_grid", &forward_grid, py::arg("params"), py::arg("n_points"));

    py::class_<GateSpec>(m, "GateSpec")
        .def_readonly("name", &GateSpec::name)
        .def_readonly("dim", &GateSpec::dim)
        .def_readonly("U", &GateSpec::U)
        .def_readonly("mu0", &GateSpec::mu0)
        .def_readonly("eta0", &GateSpec::eta0)
        .def_readonly("theta_ideal", &GateSpec::theta_ideal)
        .def_readonly("has_angles", &GateSpec::has_angles);
    m.def("named_gate", &named_gate);
    m.def("holonomy_unitary", &holonomy_unitary, py::arg("mu0"), py::arg("eta0"),
          py::arg("theta"));
    m.def("average_fidelity", &average_fidelity);

    py::class_<TrainConfig>(m, "TrainConfig")
        .def(py::init<>())
        .def_readwrite("n_slices", &TrainConfig::n_slices)
        .def_readwrite("n_hidden", &TrainConfig::n_hidden)
        .def_readwrite("L", &TrainConfig::L)
        .def_readwrite("lr1_fast", &TrainConfig::lr1_fast)
        .def_readwrite("lr1_slow", &TrainConfig::lr1_slow)
        .def_readwrite("sweeps1", &TrainConfig::sweeps1)
        .def_readwrite("lr2_fast", &TrainConfig::lr2_fast)
        .def_readwrite("lr2_slow", &TrainConfig::lr2_slow)
        .def_readwrite("sweeps2", &TrainConfig::sweeps2)
        .def_readwrite("target_fidelity", &TrainConfig::target_fidelity)
        .def_readwrite("seed", &TrainConfig::seed)
        .def_readwrite("pretrain_iters", &TrainConfig::pretrain_iters)
        .def_readwrite("pretrain_lambda", &TrainConfig::pretrain_lambda)
        .def_readwrite("exact_recompute", &TrainConfig::exact_recompute)
        .def_readwrite("verbose", &TrainConfig::verbose);

    py::class_<TrainHistory>(m, "TrainHistory")
        .def_readonly("fidelity", &TrainHistory::fidelity)
        .def_readonly("theta", &TrainHistory::theta)
        .def_readonly("wall_seconds", &TrainHistory::wall_seconds);

    py::class_<TrainResult>(m, "TrainResult")
        .def_readonly("params", &TrainResult::params)
        .def_readonly("history", &TrainResult::history)
        .def_readonly("final_fidelity", &TrainResult::final_fidelity)
        .def_readonly("theta", &TrainResult::theta)
        .def_readonly("theta_err", &TrainResult::theta_err)
        .def_readonly("pretrain_err", &TrainResult::pretrain_err)
        .def_readonly("sweeps_run", &TrainResult::sweeps_run);

    m.def("default_pretrain_lambda", &default_pretrain_lambda);
    m.def("train", &train, py::arg("gate"), py::arg("config"),
          py::call_guard<py::gil_scoped_release>());
    m.def("fidelity_of_params", &fidelity_of_params, py::arg("params"), py::arg("gate"),
          py::arg("n_slices"));
    m.def("theta_error_mod_pi", &theta_error_mod_pi);

    py::class_<CheckpointMeta>(m, "CheckpointMeta")
        .def(py::init<>())
        .def_readwrite("gate", &CheckpointMeta::gate)
        .def_readwrite("fidelity", &CheckpointMeta::fidelity)
        .def_readwrite("theta", &CheckpointMeta::theta)
        .def_readwrite("sweeps", &CheckpointMeta::sweeps);
    m.def("save_checkpoint", &save_checkpoint, py::arg("path"), py::arg("params"),
          py::arg("meta"));
    m.def(
        "load_checkpoint",
        [](const std::string& path) {
            CheckpointMeta meta;
            AnsatzParams p = load_checkpoint(path, &meta);
            return py::make_tuple(p, meta);
        },
        py::arg("path"));

    py::class_<SystematicSweepResult>(m, "SystematicSweepResult")
        .def_readonly("axis", &SystematicSweepResult::axis)
        .def_readonly("delta", &SystematicSweepResult::delta)
        .def_readonly("fidelity", &SystematicSweepResult::fidelity);
    m.def("systematic_sweep", &systematic_sweep, py::arg("trained"), py::arg("gate"),
          py::arg("axis"), py::arg("deltas"), py::arg("n_slices"),
          py::call_guard<py::gil_scoped_release>());

    py::class_<AwgnResult>(m, "AwgnResult")
        .def_readonly("runs", &AwgnResult::runs)
        .def_readonly("mean_fidelity", &AwgnResult::mean_fidelity)
        .def_readonly("log10_dF", &AwgnResult::log10_dF)
        .def_readonly("ideal_fidelity", &AwgnResult::ideal_fidelity)
        .def_readonly("final_dF", &AwgnResult::final_dF)
        .def_readonly("rms_deviation", &AwgnResult::rms_deviation)
        .def_readonly("p_stop", &AwgnResult::p_stop)
        .def_readonly("converged", &AwgnResult::converged);
    m.def("awgn_apply", &awgn_apply, py::arg("fields"), py::arg("snr_db"),
          py::arg("seed"));
    m.def("awgn_monte_carlo", &awgn_monte_carlo, py::arg("base"), py::arg("tgrid"),
          py::arg("gate"), py::arg("snr_db"), py::arg("p_max"), py::arg("base_seed"),
          py::call_guard<py::gil_scoped_release>());

    py::class_<DecoherenceResult>(m, "DecoherenceResult")
        .def_readonly("fidelity", &DecoherenceResult::fidelity)
        .def_readonly("trace_drift", &DecoherenceResult::trace_drift);
    m.def("decoherence_run", &decoherence_run, py::arg("trained"), py::arg("gate"),
          py::arg("params"), py::arg("gamma"), py::arg("gamma_phi"),
          py::arg("n_slices"), py::call_guard<py::gil_scoped_release>());
    m.def("lindblad_evolve", &lindblad_evolve, py::arg("params"), py::arg("fields"),
          py::arg("rho0"), py::arg("gamma"), py::arg("gamma_phi"), py::arg("tgrid"),
          py::call_guard<py::gil_scoped_release>());

    m.def("controlled_unitary", &controlled_unitary);
    m.def("phase_aligned_distance", &phase_aligned_distance);
    m.def(
        "toffoli_fidelity",
        [](const Eigen::Matrix2cd& t, const Eigen::Matrix2cd& td,
           const Eigen::Matrix2cd& h, const Eigen::Matrix2cd& x) {
            const Circuit c = toffoli_circuit(t, td, h, controlled_unitary(x));
            return circuit_average_fidelity(c, named_gate("Toffoli_mod"));
        },
        py::arg("T"), py::arg("Tdag"), py::arg("H"), py::arg("X"));
    m.def(
        "toffoli_composite",
        [](const Eigen::Matrix2cd& t, const Eigen::Matrix2cd& td,
           const Eigen::Matrix2cd& h, const Eigen::Matrix2cd& x) {
            return compose(toffoli_circuit(t, td, h, controlled_unitary(x)));
        },
        py::arg("T"), py::arg("Tdag"), py::arg("H"), py::arg("X"));
}
