#include "mactc/planner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "mactc/errors.hpp"
#include "mactc/individual_optimizer.hpp"
#include "mactc/phase_optimizer.hpp"
#include "mactc/rate_region.hpp"
#include "mactc/sum_optimizer.hpp"

namespace mactc {

double distance(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

void Topology::validate() const {
    if (!(gamma > 0.0) || !std::isfinite(gamma)) throw ParameterError("pathloss exponent must be > 0");
    if (distance(user1, user2) <= 0.0 || distance(user1, dest) <= 0.0 || distance(user2, dest) <= 0.0)
        throw SingularChannel("coincident nodes in topology");
}

ChannelGains gains_from_topology(const Topology& t, double p1, double p2) {
    t.validate();
    auto g = [&](Point2 a, Point2 b) { return std::pow(distance(a, b), -t.gamma / 2.0); };
    ChannelGains ch{g(t.user1, t.user2), g(t.user1, t.user2), g(t.user1, t.dest), g(t.user2, t.dest), p1, p2};
    ch.validate();
    return ch;
}

std::map<std::string, int> SchemeMap::histogram() const {
    std::map<std::string, int> h;
    for (const auto& c : cells) ++h[c.case_id];
    return h;
}

std::string SchemeMap::csv() const {
    std::string out = "x,y,case,rate\n";
    char buf[128];
    for (const auto& c : cells) {
        if (c.singular)
            std::snprintf(buf, sizeof buf, "%.6f,%.6f,%s,nan\n", c.x, c.y, c.case_id.c_str());
        else
            std::snprintf(buf, sizeof buf, "%.6f,%.6f,%s,%.6f\n", c.x, c.y, c.case_id.c_str(), c.rate);
        out += buf;
    }
    return out;
}

namespace {

template <class Solve>
SchemeMap build_map(const Topology& tmpl, const Bounds& b, int res, Objective obj, Exec exec, Solve&& solve) {
    if (res < 2) throw ParameterError("map resolution must be >= 2");
    if (!(b.xmax > b.xmin && b.ymax > b.ymin)) throw ParameterError("empty map bounds");
    if (!(tmpl.gamma > 0.0) || distance(tmpl.user1, tmpl.user2) <= 0.0)
        throw ParameterError("invalid topology template");
    SchemeMap m{b, res, obj, std::vector<MapCell>(static_cast<std::size_t>(res * res))};
    for_each_index(exec, m.cells.size(), [&](std::size_t k) {
        const int i = static_cast<int>(k) % res, j = static_cast<int>(k) / res;
        MapCell& c = m.cells[k];
        c.x = b.xmin + (b.xmax - b.xmin) * i / (res - 1);
        c.y = b.ymin + (b.ymax - b.ymin) * j / (res - 1);
        Topology t = tmpl;
        t.dest = {c.x, c.y};
        if (distance(t.dest, t.user1) < kSingularDistance || distance(t.dest, t.user2) < kSingularDistance) {
            c.singular = true;
            c.case_id = "Singular";
            c.rate = std::numeric_limits<double>::quiet_NaN();
            return;
        }
        solve(t, c);
    });
    return m;
}

}  // namespace

SchemeMap individual_scheme_map(const Topology& tmpl, double alpha1, const Bounds& bounds, int resolution,
                                double p1, double p2, Exec exec, const MapOptions& opt) {
    return build_map(tmpl, bounds, resolution, Objective::IndividualR1, exec, [&](const Topology& t, MapCell& c) {
        const ChannelGains ch = gains_from_topology(t, p1, p2);
        if (opt.optimize_phases) {
            const auto r = interpolate_individual(ch, opt.coarse_points, Exec::Serial);
            c.case_id = r.case_id;
            c.rate = r.best_rate;
        } else {
            const auto s = maximize_individual_fixed_alpha(ch, alpha1);
            c.case_id = std::string(to_string(s.case_id));
            c.rate = s.rate;
        }
        c.family = c.case_id == "Direct" ? 1 : 2;
    });
}

SchemeMap sum_scheme_map(const Topology& tmpl, double alpha1, double alpha2, const Bounds& bounds, int resolution,
                         double p1, double p2, Exec exec, const MapOptions& opt) {
    return build_map(tmpl, bounds, resolution, Objective::SumRate, exec, [&](const Topology& t, MapCell& c) {
        const ChannelGains ch = gains_from_topology(t, p1, p2);
        if (opt.optimize_phases) {
            const auto r = interpolate_sum(ch, opt.coarse_points, opt.coarse_points, Exec::Serial);
            c.case_id = r.case_id;
            c.rate = r.best_rate;
        } else {
            const auto s = maximize_sum_fixed_alphas(ch, alpha1, alpha2);
            c.case_id = std::string(to_string(s.case_id));
            c.rate = s.sum_rate;
        }
        c.family = case_family(*sum_case_from_string(c.case_id));
    });
}

namespace {

// Best fixed-phase rate over the phase patterns a solve can fall back to,
// so the bound dominates whichever pattern the achievable solve used.
double outer_fixed(const ChannelGains& ob, Objective obj, double a1, double a2) {
    if (obj == Objective::IndividualR1)
        return std::max(maximize_individual_fixed_alpha(ob, a1).rate, maximize_individual_fixed_alpha(ob, 0.0).rate);
    double best = 0.0;
    for (const auto& [x, y] : {std::pair{a1, a2}, std::pair{a1, 0.0}, std::pair{0.0, a2}, std::pair{0.0, 0.0}})
        best = std::max(best, maximize_sum_fixed_alphas(ob, x, y).sum_rate);
    return best;
}

double achievable(const ChannelGains& ch, Objective obj, const ProfileOptions& opt) {
    if (opt.phase_step > 0.0)
        return obj == Objective::IndividualR1 ? grid_search_individual(ch, opt.phase_step, Exec::Serial).best_rate
                                              : grid_search_sum(ch, opt.phase_step, Exec::Serial).best_rate;
    return obj == Objective::IndividualR1 ? maximize_individual_fixed_alpha(ch, opt.alpha1).rate
                                          : maximize_sum_fixed_alphas(ch, opt.alpha1, opt.alpha2).sum_rate;
}

}  // namespace

std::vector<ProfileSample> rate_profile_on_line(const Topology& tmpl, Point2 from, Point2 to, int samples,
                                                Objective obj, double p1, double p2, const ProfileOptions& opt,
                                                Exec exec) {
    if (samples < 2) throw ParameterError("profile needs at least 2 samples");
    std::vector<ProfileSample> out(static_cast<std::size_t>(samples));
    for_each_index(exec, out.size(), [&](std::size_t k) {
        ProfileSample& s = out[k];
        const double u = static_cast<double>(k) / (samples - 1);
        s.pos = {from.x + u * (to.x - from.x), from.y + u * (to.y - from.y)};
        Topology t = tmpl;
        t.dest = s.pos;
        if (distance(t.dest, t.user1) < kSingularDistance || distance(t.dest, t.user2) < kSingularDistance) {
            s.singular = true;
            s.rate = s.baseline_rate = s.outer_bound_rate = std::numeric_limits<double>::quiet_NaN();
            return;
        }
        const ChannelGains ch = gains_from_topology(t, p1, p2);
        const ChannelGains ob = outer_bound_gains(ch);
        s.rate = achievable(ch, obj, opt);
        s.baseline_rate = obj == Objective::IndividualR1 ? capacity(ch.g10 * ch.g10 * p1)
                                                         : classical_mac_region(ch).smin;
        s.outer_bound_rate = opt.phase_step > 0.0 ? achievable(ob, obj, opt) : outer_fixed(ob, obj, opt.alpha1, opt.alpha2);
    });
    return out;
}

std::string profile_csv(const std::vector<ProfileSample>& profile) {
    std::string out = "x,y,rate,baseline_rate,outer_bound_rate\n";
    char buf[160];
    for (const auto& s : profile) {
        if (s.singular)
            std::snprintf(buf, sizeof buf, "%.6f,%.6f,nan,nan,nan\n", s.pos.x, s.pos.y);
        else
            std::snprintf(buf, sizeof buf, "%.6f,%.6f,%.6f,%.6f,%.6f\n", s.pos.x, s.pos.y, s.rate, s.baseline_rate,
                          s.outer_bound_rate);
        out += buf;
    }
    return out;
}

}  // namespace mactc
