#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mactc/channel_model.hpp"
#include "mactc/exec.hpp"
#include "mactc/oracle.hpp"

namespace mactc {

inline constexpr double kPhaseEpsilon = 1e-6;

enum class SearchMethod { Grid, Interpolated };
std::string_view to_string(SearchMethod m);

struct PhaseSample {
    PhaseDurations alphas;
    double rate = 0.0;
};

struct PhaseSearchResult {
    PhaseDurations best_alphas;  // effective phases of the winning solve
    double best_rate = 0.0;
    SearchMethod method = SearchMethod::Grid;
    std::vector<PhaseSample> samples;
    std::optional<double> approx_error_bound;

    // Winning fixed-phase solve.
    PowerAllocation allocation;
    std::string case_id;
    double kkt_residual = 0.0;
    bool fallback = false;
};

// alpha1 in {0, step, 2 step, ...} plus 1 - eps.
PhaseSearchResult grid_search_individual(const ChannelGains& ch, double step, Exec exec = Exec::Parallel);

// (alpha1, alpha2) on the step lattice with alpha1 + alpha2 <= 1 - eps.
PhaseSearchResult grid_search_sum(const ChannelGains& ch, double step, Exec exec = Exec::Parallel);

// Diagonal alpha1 = alpha2 = alpha in [0, 0.5) for symmetric channels.
PhaseSearchResult grid_search_sum_symmetric(const ChannelGains& ch, double step, Exec exec = Exec::Parallel);

// L coarse points including both ends; quadratic through the best and its
// neighbours; the rate is recomputed at the vertex.
PhaseSearchResult interpolate_individual(const ChannelGains& ch, int coarse_points, Exec exec = Exec::Parallel);

// Symmetric channels: alpha1 = alpha2 = alpha on L points over [0, 0.5].
PhaseSearchResult interpolate_sum_symmetric(const ChannelGains& ch, int coarse_points, Exec exec = Exec::Parallel);

// L x T coarse lattice; five-point separable quadratic around the best.
PhaseSearchResult interpolate_sum(const ChannelGains& ch, int l_points, int t_points, Exec exec = Exec::Parallel);

// Vertex of the parabola through three points; nullopt unless strictly concave.
std::optional<double> quadratic_vertex(const std::array<double, 3>& x, const std::array<double, 3>& y);

// Fits c0 + c1 a1 + c2 a2 + c3 a1^2 + c4 a2^2 through five points and
// returns the coefficients; nullopt when the system is singular.
std::optional<std::array<double, 5>> fit_bivariate(const std::array<std::array<double, 2>, 5>& a,
                                                   const std::array<double, 5>& y);

// Stationary point of a fitted surface; a coordinate with nonnegative
// curvature stays at fallback.
std::array<double, 2> bivariate_vertex(const std::array<double, 5>& c, std::array<double, 2> fallback);

struct LookupEntry {
    ChannelGains ch;
    double alpha1 = 0.0;
    double alpha2 = 0.0;
    double rate = 0.0;
};

// Precomputed optimal phases on a gain lattice.
class LookupTable {
public:
    LookupTable() = default;
    explicit LookupTable(std::vector<LookupEntry> entries) : entries_(std::move(entries)) {}

    static LookupTable build(const std::vector<ChannelGains>& lattice, Objective objective, double step,
                             Exec exec = Exec::Parallel);

    const std::vector<LookupEntry>& entries() const { return entries_; }

    // Nearest entry in log-gain / log-power distance.
    const LookupEntry& nearest(const ChannelGains& ch) const;

    // Nearest stored phases refined on a +-radius neighbourhood.
    PhaseSearchResult lookup(const ChannelGains& ch, Objective objective, double radius = 0.02) const;

private:
    std::vector<LookupEntry> entries_;
};

}  // namespace mactc
