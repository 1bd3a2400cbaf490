#pragma once

#include "mactc/channel_model.hpp"

namespace mactc::reduced {

// Nested golden-section search on the concave fixed-phase programs. The
// phase-3 split is reduced to one scalar: for a cooperative budget v the
// beamforming term is maximized in closed form, so every visited point is
// feasible. Slow but independent of the KKT case analysis.

struct Result {
    double value = 0.0;
    PowerAllocation allocation;
};

// max min(J1, S4) with alpha2 = 0 and rho23 = P2 / (1 - alpha1).
Result individual(const ChannelGains& ch, double alpha1, int iterations = 64);

// max min(S1, S2, S3, S4) at fixed phases.
Result sum(const ChannelGains& ch, const PhaseDurations& pd, int iterations = 40);

// Sum rate of the scheme where each user also sends a private part of power
// dag1 / dag2 during its own broadcast phase.
Result sum_augmented(const ChannelGains& ch, const PhaseDurations& pd, double dag1, double dag2,
                     int iterations = 40);

// Phase-3 allocation for budgets Q1, Q2 and cooperative receive power v.
void split_phase3(const ChannelGains& ch, double q1, double q2, double v, PowerAllocation& pa);

}  // namespace mactc::reduced
