#pragma once

#include <string>

#include "catgate/ansatz.hpp"
#include "catgate/circuits.hpp"
#include "catgate/noise.hpp"
#include "catgate/trainer.hpp"

namespace catgate {

struct CheckpointMeta {
    std::string gate;
    double fidelity = 0.0;
    double theta = 0.0;
    int sweeps = 0;
};

void save_checkpoint(const std::string& path, const AnsatzParams& p,
                     const CheckpointMeta& meta);
AnsatzParams load_checkpoint(const std::string& path, CheckpointMeta* meta = nullptr);

void write_history_csv(const std::string& path, const TrainHistory& h);
void write_path_csv(const std::string& path, const ControlPath& cp);
void write_fields_csv(const std::string& path, const DriveFields& f);
void write_systematic_csv(const std::string& path, const SystematicSweepResult& r);
void write_awgn_csv(const std::string& path, const AwgnResult& r);
void write_bloch_csv(const std::string& path, const std::vector<double>& t,
                     const BlochTrajectories& b);

class BadCheckpoint : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// "start:stop:count" -> linspace
std::vector<double> parse_range(const std::string& spec);

}  // namespace catgate
