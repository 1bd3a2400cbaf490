#pragma once

#include <map>
#include <string>
#include <vector>

#include "mactc/channel_model.hpp"
#include "mactc/exec.hpp"
#include "mactc/oracle.hpp"

namespace mactc {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

double distance(Point2 a, Point2 b);

struct Topology {
    Point2 user1{-0.5, 0.0};
    Point2 user2{0.5, 0.0};
    Point2 dest{0.0, 1.0};
    double gamma = 2.4;

    void validate() const;
};

// g = d^(-gamma / 2); g12 = g21.
ChannelGains gains_from_topology(const Topology& t, double p1, double p2);

struct Bounds {
    double xmin = -2.0, xmax = 2.0, ymin = -2.0, ymax = 2.0;
};

inline constexpr double kSingularDistance = 1e-3;

struct MapCell {
    double x = 0.0;
    double y = 0.0;
    bool singular = false;
    std::string case_id;  // "Singular" for masked cells
    int family = 0;       // sum maps: 1..4; individual maps: 1 Direct, 2 cooperative
    double rate = 0.0;
};

struct SchemeMap {
    Bounds bounds;
    int resolution = 0;
    Objective objective = Objective::SumRate;
    std::vector<MapCell> cells;  // row-major, y outer, increasing x then y

    std::map<std::string, int> histogram() const;
    // "x,y,case,rate", 6 decimals; masked cells carry rate "nan".
    std::string csv() const;
};

struct MapOptions {
    // Optimize phases per cell by quadratic interpolation instead of fixing them.
    bool optimize_phases = false;
    int coarse_points = 8;
};

// The destination of the template topology moves over the grid.
SchemeMap individual_scheme_map(const Topology& tmpl, double alpha1, const Bounds& bounds, int resolution,
                                double p1, double p2, Exec exec = Exec::Parallel, const MapOptions& opt = {});
SchemeMap sum_scheme_map(const Topology& tmpl, double alpha1, double alpha2, const Bounds& bounds,
                         int resolution, double p1, double p2, Exec exec = Exec::Parallel,
                         const MapOptions& opt = {});

struct ProfileSample {
    Point2 pos;
    bool singular = false;
    double rate = 0.0;
    double baseline_rate = 0.0;     // direct link (individual) or classical MAC (sum)
    double outer_bound_rate = 0.0;  // same search on outer_bound_gains
};

struct ProfileOptions {
    double alpha1 = 0.5;
    double alpha2 = 0.2;
    // > 0: grid-search phases with this step instead of fixing them.
    double phase_step = 0.0;
};

std::vector<ProfileSample> rate_profile_on_line(const Topology& tmpl, Point2 from, Point2 to, int samples,
                                                Objective objective, double p1, double p2,
                                                const ProfileOptions& opt = {}, Exec exec = Exec::Parallel);

std::string profile_csv(const std::vector<ProfileSample>& profile);

}  // namespace mactc
