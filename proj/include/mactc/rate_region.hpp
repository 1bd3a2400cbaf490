#pragma once

#include <string>
#include <vector>

#include "mactc/channel_model.hpp"
#include "mactc/exec.hpp"

namespace mactc {

struct RatePoint {
    double r1 = 0.0;
    double r2 = 0.0;
    bool operator==(const RatePoint&) const = default;
};

// {R1 <= j1, R2 <= j2, R1 + R2 <= smin, R >= 0}. Corners run counterclockwise
// from the origin with repeated vertices removed.
struct RateRegion {
    double j1 = 0.0;
    double j2 = 0.0;
    double smin = 0.0;
    std::vector<RatePoint> corners;

    bool contains(RatePoint p, double tol = 0.0) const;
};

RateRegion region_from_constraints(double j1, double j2, double smin);
RateRegion region_for_allocation(const ChannelGains& ch, const PhaseDurations& pd,
                                 const PowerAllocation& pa);
RateRegion classical_mac_region(const ChannelGains& ch);

// Gains of the cut-set style bound: g12^2 -> g10^2 + g12^2, g21^2 -> g20^2 + g21^2.
ChannelGains outer_bound_gains(const ChannelGains& ch);

// Pareto frontier of the union of per-allocation regions over a phase grid
// and a square-root power grid. The grid cells are seeded with the
// fixed-phase sum and individual optima. The union is convexified exactly
// (time sharing), so the result is the Pareto part of a convex hull, sorted
// by increasing r1.
std::vector<RatePoint> envelope_region(const ChannelGains& ch, double alpha_grid_step,
                                       int power_grid_points, Exec exec = Exec::Parallel);

// Same grid on outer_bound_gains(ch); the allocation set is a superset of
// the one envelope_region(ch) uses, so containment holds exactly.
std::vector<RatePoint> outer_bound_region(const ChannelGains& ch, double alpha_grid_step,
                                          int power_grid_points, Exec exec = Exec::Parallel);

// Pareto part of the convex hull of pts (plus the origin), by increasing r1.
std::vector<RatePoint> pareto_hull(std::vector<RatePoint> pts);

// True when p lies in the down-closed convex region under frontier.
bool frontier_contains(const std::vector<RatePoint>& frontier, RatePoint p, double tol);

double max_sum_rate(const std::vector<RatePoint>& frontier);

// "r1,r2" header, 6 decimals.
std::string frontier_csv(const std::vector<RatePoint>& frontier);

}  // namespace mactc
