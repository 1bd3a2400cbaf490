#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

#include "mactc/channel_model.hpp"
#include "mactc/exec.hpp"

namespace mactc {

enum class Objective { IndividualR1, SumRate };

std::string_view to_string(Objective o);

// Brute-force grid search. Each free power is parametrized as cap * t^2 with
// t on a uniform grid in [0, 1]. After the first pass, refine_rounds passes
// of refine_points per dimension zoom on +-2 cells around the incumbent.
struct OracleConfig {
    int power_grid_points = 64;
    double alpha_step = 0.05;
    Objective objective = Objective::SumRate;
    int refine_rounds = 4;
    int refine_points = 16;

    void validate() const;
};

struct OracleResult {
    double rate = 0.0;
    PhaseDurations phases;
    PowerAllocation allocation;
};

// max min(J1, S4) over (rho11, rho13), rho10 from the power equality.
OracleResult oracle_individual(const ChannelGains& ch, double alpha1, const OracleConfig& cfg,
                               Exec exec = Exec::Parallel);

// max min(S1..S4) over (rho11, rho22, rho13, rho23), privates eliminated.
OracleResult oracle_sum(const ChannelGains& ch, double alpha1, double alpha2, const OracleConfig& cfg,
                        Exec exec = Exec::Parallel);

// Oracle maximized over the phase grid of cfg.alpha_step as well.
OracleResult oracle_phase_search(const ChannelGains& ch, const OracleConfig& cfg, Exec exec = Exec::Parallel);

// 64-bit FNV-1a, hex encoded.
std::string fnv1a_hex(const std::string& data);

// {scenario, rate, allocation, config, digest}; the digest covers the
// compact dump of the record without the digest field.
nlohmann::json golden_record(const std::string& scenario, const ChannelGains& ch, const OracleResult& r,
                             const OracleConfig& cfg);
bool verify_golden(const nlohmann::json& record);

}  // namespace mactc
