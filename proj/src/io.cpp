#include "catgate/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

namespace catgate {

using nlohmann::json;

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << std::setprecision(12);
    return f;
}

}  // namespace

void save_checkpoint(const std::string& path, const AnsatzParams& p,
                     const CheckpointMeta& meta) {
    json j;
    j["n_hidden"] = p.n_hidden;
    j["mu0"] = p.mu0;
    j["eta0"] = p.eta0;
    j["L"] = p.L;
    j["W1"] = p.W1;
    j["B1"] = p.B1;
    j["phi1"] = p.phi1;
    j["W2"] = p.W2;
    j["W3"] = p.W3;
    j["B3"] = p.B3;
    j["phi2"] = p.phi2;
    j["W4"] = p.W4;
    j["B2"] = p.pinned_B2();
    j["B4"] = p.pinned_B4();
    j["metadata"] = {{"gate", meta.gate},
                     {"fidelity", meta.fidelity},
                     {"theta", meta.theta},
                     {"sweeps", meta.sweeps}};
    auto f = open_out(path);
    f << j.dump(2) << "\n";
}

AnsatzParams load_checkpoint(const std::string& path, CheckpointMeta* meta) {
    std::ifstream f(path);
    if (!f) throw BadCheckpoint("cannot open checkpoint: " + path);
    json j;
    try {
        f >> j;
    } catch (const json::exception& e) {
        throw BadCheckpoint("malformed checkpoint " + path + ": " + e.what());
    }
    AnsatzParams p;
    try {
        p.n_hidden = j.at("n_hidden").get<int>();
        p.mu0 = j.at("mu0").get<double>();
        p.eta0 = j.at("eta0").get<double>();
        p.L = j.at("L").get<double>();
        p.W1 = j.at("W1").get<std::vector<double>>();
        p.B1 = j.at("B1").get<std::vector<double>>();
        p.phi1 = j.at("phi1").get<std::vector<double>>();
        p.W2 = j.at("W2").get<std::vector<double>>();
        p.W3 = j.at("W3").get<std::vector<double>>();
        p.B3 = j.at("B3").get<std::vector<double>>();
        p.phi2 = j.at("phi2").get<std::vector<double>>();
        p.W4 = j.at("W4").get<std::vector<double>>();
        if (meta && j.contains("metadata")) {
            const auto& m = j.at("metadata");
            meta->gate = m.value("gate", "");
            meta->fidelity = m.value("fidelity", 0.0);
            meta->theta = m.value("theta", 0.0);
            meta->sweeps = m.value("sweeps", 0);
        }
    } catch (const json::exception& e) {
        throw BadCheckpoint("incomplete checkpoint " + path + ": " + e.what());
    }
    const std::size_t nm = std::size_t(p.n_mu()), ne = std::size_t(p.n_eta());
    if (p.W1.size() != nm || p.B1.size() != nm || p.phi1.size() != nm ||
        p.W2.size() != nm || p.W3.size() != ne || p.B3.size() != ne ||
        p.phi2.size() != ne || p.W4.size() != ne)
        throw BadCheckpoint("checkpoint arrays inconsistent with n_hidden: " + path);
    return p;
}

void write_history_csv(const std::string& path, const TrainHistory& h) {
    auto f = open_out(path);
    f << "sweep,fidelity,theta\n";
    for (std::size_t i = 0; i < h.fidelity.size(); ++i)
        f << i + 1 << "," << h.fidelity[i] << "," << h.theta[i] << "\n";
}

void write_path_csv(const std::string& path, const ControlPath& cp) {
    auto f = open_out(path);
    f << "t,mu,eta,dmu,deta\n";
    for (std::size_t i = 0; i < cp.size(); ++i)
        f << cp.t[i] << "," << cp.mu[i] << "," << cp.eta[i] << "," << cp.dmu[i] << ","
          << cp.deta[i] << "\n";
}

void write_fields_csv(const std::string& path, const DriveFields& dsf) {
    auto f = open_out(path);
    f << "index,Omega_x,Omega_y,Omega_z,chi,eps_re,eps_im\n";
    for (std::size_t i = 0; i < dsf.size(); ++i) {
        const double chi = i < dsf.chi.size() ? dsf.chi[i] : 0.0;
        const std::complex<double> eps =
            i < dsf.eps.size() ? dsf.eps[i] : std::complex<double>(0.0);
        f << i << "," << dsf.ox[i] << "," << dsf.oy[i] << "," << dsf.oz[i] << "," << chi
          << "," << eps.real() << "," << eps.imag() << "\n";
    }
}

void write_systematic_csv(const std::string& path, const SystematicSweepResult& r) {
    auto f = open_out(path);
    f << "delta,fidelity\n";
    for (std::size_t i = 0; i < r.delta.size(); ++i)
        f << r.delta[i] << "," << r.fidelity[i] << "\n";
}

void write_awgn_csv(const std::string& path, const AwgnResult& r) {
    auto f = open_out(path);
    f << "runs,mean_fidelity,log10_dF\n";
    for (std::size_t i = 0; i < r.runs.size(); ++i)
        f << r.runs[i] << "," << r.mean_fidelity[i] << "," << r.log10_dF[i] << "\n";
}

void write_bloch_csv(const std::string& path, const std::vector<double>& t,
                     const BlochTrajectories& b) {
    auto f = open_out(path);
    f << "t,rp_x,rp_y,rp_z,rm_x,rm_y,rm_z\n";
    for (std::size_t i = 0; i < t.size(); ++i)
        f << t[i] << "," << b.rplus[i][0] << "," << b.rplus[i][1] << "," << b.rplus[i][2]
          << "," << b.rminus[i][0] << "," << b.rminus[i][1] << "," << b.rminus[i][2]
          << "\n";
}

std::vector<double> parse_range(const std::string& spec) {
    std::istringstream ss(spec);
    std::string a, b, c;
    if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') || !std::getline(ss, c))
        throw std::invalid_argument("range must be start:stop:count, got " + spec);
    double start, stop;
    long count;
    try {
        start = std::stod(a);
        stop = std::stod(b);
        count = std::stol(c);
    } catch (const std::exception&) {
        throw std::invalid_argument("range must be numeric start:stop:count, got " + spec);
    }
    if (count < 1) throw std::invalid_argument("range count must be >= 1");
    std::vector<double> out;
    out.reserve(count);
    if (count == 1) {
        out.push_back(start);
        return out;
    }
    for (long i = 0; i < count; ++i)
        out.push_back(start + (stop - start) * double(i) / double(count - 1));
    return out;
}

}  // namespace catgate
