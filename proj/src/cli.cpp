#include "mactc/cli.hpp"

#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "mactc/errors.hpp"
#include "mactc/exec.hpp"
#include "mactc/json_io.hpp"

namespace mactc {

namespace {

std::string f6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

// Raw flag values; only the ones given on the command line enter the scenario.
struct Flags {
    std::string scenario;
    bool json_mode = false;
    int threads = 0;
    std::optional<double> g12, g21, g10, g20, p1, p2, gamma;
    std::vector<double> user1, user2, dest, bounds, line;
    std::optional<std::string> objective, search, out, summary, table, golden, verify, profile_out, name;
    std::optional<double> alpha1, alpha2, step, alpha_step, tolerance, phase_step;
    std::optional<int> coarse_points, t_points, power_points, resolution, samples, refine_rounds, refine_points;
    bool optimize_phases = false, no_outer = false, realized = false, phase_search = false, symmetric = false;
    std::vector<double> g12_list, g21_list, g10_list, g20_list, p1_list, p2_list;
};

void add_common(CLI::App* c, Flags& f) {
    c->add_option("--scenario", f.scenario, "Scenario JSON file; its fields override flags")->check(CLI::ExistingFile);
    c->add_flag("--json", f.json_mode, "Print a single JSON result on stdout");
    c->add_option("--threads", f.threads, "Worker cap for parallel sweeps (default: all cores)");
    c->add_option("--g12", f.g12, "Gain user 1 -> user 2");
    c->add_option("--g21", f.g21, "Gain user 2 -> user 1 (default: g12)");
    c->add_option("--g10", f.g10, "Gain user 1 -> destination");
    c->add_option("--g20", f.g20, "Gain user 2 -> destination (default: g10)");
    c->add_option("--p1", f.p1, "Power budget of user 1");
    c->add_option("--p2", f.p2, "Power budget of user 2");
    c->add_option("--user1", f.user1, "Topology: user 1 position x y")->expected(2);
    c->add_option("--user2", f.user2, "Topology: user 2 position x y")->expected(2);
    c->add_option("--dest", f.dest, "Topology: destination position x y")->expected(2);
    c->add_option("--gamma", f.gamma, "Topology: pathloss exponent");
    c->add_option("--objective", f.objective, "individual or sum");
    c->add_option("--alpha1", f.alpha1, "Phase-1 duration");
    c->add_option("--alpha2", f.alpha2, "Phase-2 duration");
    c->add_option("--name", f.name, "Scenario name");
}

template <class T>
void put(json& j, const char* key, const std::optional<T>& v) {
    if (v) j[key] = *v;
}

json flags_to_json(const Flags& f) {
    json s = json::object();
    json g = json::object();
    put(g, "g12", f.g12);
    put(g, "g21", f.g21);
    put(g, "g10", f.g10);
    put(g, "g20", f.g20);
    if (!g.empty()) s["gains"] = g;
    json t = json::object();
    if (!f.user1.empty()) t["user1"] = f.user1;
    if (!f.user2.empty()) t["user2"] = f.user2;
    if (!f.dest.empty()) t["dest"] = f.dest;
    put(t, "gamma", f.gamma);
    if (!t.empty()) s["topology"] = t;
    put(s, "p1", f.p1);
    put(s, "p2", f.p2);
    put(s, "name", f.name);
    put(s, "objective", f.objective);
    put(s, "search", f.search);
    put(s, "alpha1", f.alpha1);
    put(s, "alpha2", f.alpha2);
    put(s, "step", f.step);
    put(s, "alpha_step", f.alpha_step);
    put(s, "tolerance", f.tolerance);
    put(s, "phase_step", f.phase_step);
    put(s, "coarse_points", f.coarse_points);
    put(s, "t_points", f.t_points);
    put(s, "power_grid_points", f.power_points);
    put(s, "resolution", f.resolution);
    put(s, "samples", f.samples);
    put(s, "table", f.table);
    if (f.bounds.size() == 4) s["bounds"] = {{"xmin", f.bounds[0]}, {"xmax", f.bounds[1]}, {"ymin", f.bounds[2]}, {"ymax", f.bounds[3]}};
    if (f.line.size() == 4) s["line"] = f.line;
    if (f.optimize_phases) s["optimize_phases"] = true;
    if (f.no_outer) s["no_outer"] = true;
    if (f.realized) s["realized"] = true;
    if (f.phase_search) s["phase_search"] = true;
    if (f.symmetric) s["symmetric"] = true;
    json o = json::object();
    put(o, "refine_rounds", f.refine_rounds);
    put(o, "refine_points", f.refine_points);
    if (!o.empty()) s["oracle"] = o;
    json out = json::object();
    put(out, "path", f.out);
    put(out, "summary", f.summary);
    put(out, "golden", f.golden);
    put(out, "profile", f.profile_out);
    if (!out.empty()) s["output"] = out;
    return s;
}

json load_scenario(const Flags& f) {
    json s = flags_to_json(f);
    if (!f.scenario.empty()) {
        const json file = read_json_file(f.scenario);
        if (!file.is_object()) throw ParameterError("scenario must be a JSON object");
        s.update(file);
    }
    if (s.contains("gains") && s.contains("topology"))
        throw ParameterError("scenario needs exactly one of gains and topology");
    return s;
}

Objective objective_of(const json& s) {
    const std::string o = s.value("objective", std::string("sum"));
    if (o == "individual" || o == "IndividualR1") return Objective::IndividualR1;
    if (o == "sum" || o == "SumRate") return Objective::SumRate;
    throw ParameterError("objective must be individual or sum");
}

Topology topology_of(const json& s) { return s.value("topology", json::object()).get<Topology>(); }

// Defaults to the symmetric setup g12 = g21 = 5, g10 = g20 = 1, P = 2.
ChannelGains gains_of(const json& s) {
    const double p1 = s.value("p1", 2.0), p2 = s.value("p2", 2.0);
    if (s.contains("topology")) return gains_from_topology(topology_of(s), p1, p2);
    const json g = s.value("gains", json::object());
    ChannelGains ch;
    ch.g12 = g.value("g12", 5.0);
    ch.g21 = g.value("g21", ch.g12);
    ch.g10 = g.value("g10", 1.0);
    ch.g20 = g.value("g20", ch.g10);
    ch.p1 = g.value("p1", p1);
    ch.p2 = g.value("p2", p2);
    ch.validate();
    return ch;
}

std::string out_path(const json& s, const char* key, const std::string& fallback) {
    return s.value("output", json::object()).value(key, fallback);
}

void emit(std::ostream& out, bool json_mode, const json& result, const std::vector<std::string>& lines) {
    if (json_mode) {
        out << result.dump(2) << "\n";
        return;
    }
    for (const auto& l : lines) out << l << "\n";
}

// ---- region

int cmd_region(const Flags& f, std::ostream& out) {
    const json s = load_scenario(f);
    const ChannelGains ch = gains_of(s);
    const double step = s.value("alpha_step", 0.05);
    const int points = s.value("power_grid_points", 8);
    const std::string prefix = out_path(s, "path", "region");

    const RateRegion mac = classical_mac_region(ch);
    const auto env = envelope_region(ch, step, points);
    write_text_file(prefix + "_mac.csv", frontier_csv(mac.corners));
    write_text_file(prefix + "_envelope.csv", frontier_csv(env));
    std::vector<std::string> files{prefix + "_mac.csv", prefix + "_envelope.csv"};

    json r = {{"gains", ch},
              {"classical_mac", mac},
              {"envelope_points", env.size()},
              {"envelope_max_sum_rate", max_sum_rate(env)}};
    std::vector<std::string> lines{"classical_mac_sum_rate: " + f6(mac.smin),
                                   "envelope_max_sum_rate: " + f6(max_sum_rate(env))};
    if (!s.value("no_outer", false)) {
        const auto ob = outer_bound_region(ch, step, points);
        write_text_file(prefix + "_outer.csv", frontier_csv(ob));
        files.push_back(prefix + "_outer.csv");
        r["outer_max_sum_rate"] = max_sum_rate(ob);
        r["outer_gap_at_apex"] = max_sum_rate(ob) - max_sum_rate(env);
        lines.push_back("outer_max_sum_rate: " + f6(max_sum_rate(ob)));
    }
    if (s.contains("allocation")) {
        const PhaseDurations pd = s.value("phases", json{{"alpha1", 0.0}}).get<PhaseDurations>();
        r["allocation_region"] = region_for_allocation(ch, pd, s["allocation"].get<PowerAllocation>());
    }
    r["files"] = files;
    write_text_file(prefix + "_region.json", r.dump(2) + "\n");
    for (const auto& p : files) lines.push_back("wrote " + p);
    lines.push_back("wrote " + prefix + "_region.json");
    emit(out, f.json_mode, r, lines);
    return kExitOk;
}

// ---- maximize

json search_json(const PhaseSearchResult& r) {
    json j = r;
    j["rate"] = r.best_rate;
    return j;
}

int cmd_maximize(const Flags& f, std::ostream& out) {
    const json s = load_scenario(f);
    const ChannelGains ch = gains_of(s);
    const Objective obj = objective_of(s);
    const std::string search = s.value("search", std::string("fixed"));
    const bool indiv = obj == Objective::IndividualR1;
    const double baseline = indiv ? capacity(ch.g10 * ch.g10 * ch.p1) : classical_mac_region(ch).smin;

    json r;
    if (search == "fixed") {
        if (indiv) {
            const auto sol = maximize_individual_fixed_alpha(ch, s.value("alpha1", 0.5));
            r = sol;
            r["phases"] = sol.phases();
        } else if (s.value("symmetric", false)) {
            const auto sol = maximize_sum_symmetric(ch, s.value("alpha1", 0.2));
            r = sol;
            r["rate"] = sol.sum_rate;
        } else {
            const auto sol = maximize_sum_fixed_alphas(ch, s.value("alpha1", 0.2), s.value("alpha2", 0.2));
            r = sol;
            r["rate"] = sol.sum_rate;
        }
        r["method"] = "Fixed";
    } else if (search == "grid") {
        const double step = s.value("step", indiv ? 0.01 : 0.02);
        r = search_json(indiv ? grid_search_individual(ch, step)
                              : (s.value("symmetric", false) ? grid_search_sum_symmetric(ch, step)
                                                             : grid_search_sum(ch, step)));
    } else if (search == "interp" || search == "both") {
        const int l = s.value("coarse_points", 8), t = s.value("t_points", l);
        const bool sym = !indiv && s.value("symmetric", false);
        PhaseSearchResult ip = indiv ? interpolate_individual(ch, l)
                                     : (sym ? interpolate_sum_symmetric(ch, l) : interpolate_sum(ch, l, t));
        if (search == "both") {
            const double step = s.value("step", indiv ? 0.01 : 0.02);
            const auto grid = indiv ? grid_search_individual(ch, step)
                                    : (sym ? grid_search_sum_symmetric(ch, step) : grid_search_sum(ch, step));
            ip.approx_error_bound = std::abs(ip.best_rate - grid.best_rate);
            r = search_json(ip);
            r["grid"] = {{"best_alphas", grid.best_alphas}, {"best_rate", grid.best_rate}};
        } else {
            r = search_json(ip);
        }
    } else if (search == "lookup") {
        if (!s.contains("table")) throw ParameterError("lookup search needs a table file");
        const auto table = lookup_table_from_json(read_json_file(s["table"].get<std::string>()));
        r = search_json(table.lookup(ch, obj, s.value("step", 0.02)));
    } else {
        throw ParameterError("search must be fixed, grid, interp, both or lookup");
    }
    r.erase("samples");
    r["objective"] = std::string(to_string(obj));
    r["gains"] = ch;
    r["baseline_rate"] = baseline;
    r["gain_over_baseline"] = r["rate"].get<double>() - baseline;
    if (s.contains("output") && s["output"].contains("path")) write_text_file(s["output"]["path"], r.dump(2) + "\n");

    std::vector<std::string> lines{
        "objective: " + r["objective"].get<std::string>(), "method: " + r["method"].get<std::string>(),
        "case_id: " + r["case_id"].get<std::string>(), "rate: " + f6(r["rate"].get<double>()),
        "baseline_rate: " + f6(baseline), "gain_over_baseline: " + f6(r["gain_over_baseline"].get<double>()),
        "kkt_residual: " + f6(r["kkt_residual"].get<double>())};
    emit(out, f.json_mode, r, lines);
    return kExitOk;
}

// ---- map

int cmd_map(const Flags& f, std::ostream& out) {
    const json s = load_scenario(f);
    if (s.contains("gains")) throw ParameterError("map takes a topology, not gains");
    const Topology t = topology_of(s);
    const Objective obj = objective_of(s);
    const bool indiv = obj == Objective::IndividualR1;
    const double p1 = s.value("p1", 2.0), p2 = s.value("p2", 2.0);
    const double a1 = s.value("alpha1", indiv ? 0.5 : 0.2), a2 = s.value("alpha2", 0.2);

    json r = {{"objective", std::string(to_string(obj))}, {"topology", t}};
    std::vector<std::string> lines;
    if (s.contains("line")) {
        const auto l = s["line"].get<std::vector<double>>();
        if (l.size() != 4) throw ParameterError("line needs x0 y0 x1 y1");
        ProfileOptions po{a1, a2, s.value("phase_step", 0.0)};
        const auto prof = rate_profile_on_line(t, {l[0], l[1]}, {l[2], l[3]}, s.value("samples", 41), obj, p1, p2, po);
        const std::string path = out_path(s, "profile", "profile.csv");
        write_text_file(path, profile_csv(prof));
        r["profile_samples"] = prof.size();
        r["profile_file"] = path;
        lines.push_back("wrote " + path);
    } else {
        const Bounds b = s.value("bounds", json::object()).get<Bounds>();
        const int res = s.value("resolution", 101);
        MapOptions mo{s.value("optimize_phases", false), s.value("coarse_points", 8)};
        const SchemeMap m = indiv ? individual_scheme_map(t, a1, b, res, p1, p2, Exec::Parallel, mo)
                                  : sum_scheme_map(t, a1, a2, b, res, p1, p2, Exec::Parallel, mo);
        const std::string csv = out_path(s, "path", "map.csv");
        const std::string summary = out_path(s, "summary", "map.json");
        write_text_file(csv, m.csv());
        r["map"] = m;
        write_text_file(summary, json(m).dump(2) + "\n");
        r["files"] = {csv, summary};
        for (const auto& [k, v] : m.histogram()) lines.push_back(k + ": " + std::to_string(v));
        lines.push_back("wrote " + csv);
        lines.push_back("wrote " + summary);
    }
    emit(out, f.json_mode, r, lines);
    return kExitOk;
}

// ---- gains

int cmd_gains(const Flags& f, std::ostream& out) {
    const json s = load_scenario(f);
    const ChannelGains ch = gains_of(s);
    const GainReport g = gain_vs_mac(ch);
    json r = g;
    r["gains"] = ch;
    std::vector<std::string> lines{"delta_r1: " + f6(g.delta_r1),   "delta_r2: " + f6(g.delta_r2),
                                   "delta_sum: " + f6(g.delta_sum), "finite_r1: " + f6(g.finite_r1),
                                   "finite_r2: " + f6(g.finite_r2), "finite_sum: " + f6(g.finite_sum)};
    if (s.value("realized", false)) {
        const double step = s.value("step", 0.01);
        const bool sym = ch.g12 == ch.g21 && ch.g10 == ch.g20 && ch.p1 == ch.p2;
        const double sum = (sym ? grid_search_sum_symmetric(ch, step) : grid_search_sum(ch, step)).best_rate;
        const double r1 = grid_search_individual(ch, step).best_rate;
        r["realized_sum"] = sum - classical_mac_region(ch).smin;
        r["realized_r1"] = r1 - capacity(ch.g10 * ch.g10 * ch.p1);
        lines.push_back("realized_sum: " + f6(r["realized_sum"].get<double>()));
        lines.push_back("realized_r1: " + f6(r["realized_r1"].get<double>()));
    }
    emit(out, f.json_mode, r, lines);
    return kExitOk;
}

// ---- oracle

OracleConfig oracle_config(const json& s, Objective obj) {
    OracleConfig cfg = s.value("oracle", json::object()).get<OracleConfig>();
    cfg.objective = obj;
    if (s.contains("power_grid_points")) cfg.power_grid_points = s["power_grid_points"].get<int>();
    if (s.contains("alpha_step")) cfg.alpha_step = s["alpha_step"].get<double>();
    cfg.validate();
    return cfg;
}

int cmd_oracle(const Flags& f, std::ostream& out) {
    const json s = load_scenario(f);
    const double tol = s.value("tolerance", 1e-3);
    if (f.verify) {
        const json rec = read_json_file(*f.verify);
        const bool digest_ok = verify_golden(rec);
        const ChannelGains ch = rec.at("scenario").at("gains").get<ChannelGains>();
        const PhaseDurations pd = rec.at("scenario").at("phases").get<PhaseDurations>();
        const OracleConfig cfg = rec.at("config").get<OracleConfig>();
        const double closed = cfg.objective == Objective::IndividualR1
                                  ? maximize_individual_fixed_alpha(ch, pd.alpha1).rate
                                  : maximize_sum_fixed_alphas(ch, pd.alpha1, pd.alpha2).sum_rate;
        const double diff = closed - rec.at("rate").get<double>();
        const bool pass = digest_ok && std::abs(diff) <= tol;
        json r = {{"digest_ok", digest_ok}, {"closed_form_rate", closed}, {"difference", diff}, {"pass", pass}};
        emit(out, f.json_mode, r,
             {std::string("digest_ok: ") + (digest_ok ? "true" : "false"), "closed_form_rate: " + f6(closed),
              "difference: " + f6(diff), std::string("pass: ") + (pass ? "true" : "false")});
        return pass ? kExitOk : kExitNumerical;
    }

    const ChannelGains ch = gains_of(s);
    const Objective obj = objective_of(s);
    const OracleConfig cfg = oracle_config(s, obj);
    const bool indiv = obj == Objective::IndividualR1;
    OracleResult orc;
    double closed = 0.0;
    std::string case_id;
    if (s.value("phase_search", false)) {
        orc = oracle_phase_search(ch, cfg);
        const auto g = indiv ? grid_search_individual(ch, cfg.alpha_step) : grid_search_sum(ch, cfg.alpha_step);
        closed = g.best_rate;
        case_id = g.case_id;
    } else if (indiv) {
        // The oracle runs at the phases the closed form reports (Direct drops alpha1).
        const auto sol = maximize_individual_fixed_alpha(ch, s.value("alpha1", 0.5));
        orc = oracle_individual(ch, sol.alpha1, cfg);
        closed = sol.rate;
        case_id = to_string(sol.case_id);
    } else {
        // One-sided and classical cases zero a broadcast phase; compare at the reported phases.
        const auto sol = maximize_sum_fixed_alphas(ch, s.value("alpha1", 0.2), s.value("alpha2", 0.2));
        orc = oracle_sum(ch, sol.phases.alpha1, sol.phases.alpha2, cfg);
        closed = sol.sum_rate;
        case_id = to_string(sol.case_id);
    }
    const double diff = closed - orc.rate;
    const bool pass = std::abs(diff) <= tol;
    json r = {{"gains", ch},         {"objective", std::string(to_string(obj))},
              {"config", cfg},       {"closed_form_rate", closed},
              {"case_id", case_id},  {"oracle", orc},
              {"difference", diff},  {"tolerance", tol},
              {"pass", pass}};
    std::vector<std::string> lines{"case_id: " + case_id, "closed_form_rate: " + f6(closed),
                                   "oracle_rate: " + f6(orc.rate), "difference: " + f6(diff),
                                   std::string("pass: ") + (pass ? "true" : "false")};
    const std::string golden = out_path(s, "golden", "");
    if (!golden.empty()) {
        write_text_file(golden, golden_record(s.value("name", std::string("cli")), ch, orc, cfg).dump(2) + "\n");
        lines.push_back("wrote " + golden);
    }
    emit(out, f.json_mode, r, lines);
    return pass ? kExitOk : kExitNumerical;
}

// ---- table

int cmd_table(const Flags& f, std::ostream& out) {
    const json s = load_scenario(f);
    const Objective obj = objective_of(s);
    auto or_one = [](const std::vector<double>& v, double d) { return v.empty() ? std::vector<double>{d} : v; };
    std::vector<ChannelGains> lattice;
    for (double g12 : or_one(f.g12_list, 5.0))
        for (double g21 : or_one(f.g21_list, g12))
            for (double g10 : or_one(f.g10_list, 1.0))
                for (double g20 : or_one(f.g20_list, g10))
                    for (double p1 : or_one(f.p1_list, 2.0))
                        for (double p2 : or_one(f.p2_list, p1)) {
                            ChannelGains ch{g12, g21, g10, g20, p1, p2};
                            ch.validate();
                            lattice.push_back(ch);
                        }
    const double step = s.value("step", obj == Objective::IndividualR1 ? 0.01 : 0.02);
    const auto table = LookupTable::build(lattice, obj, step);
    const std::string path = out_path(s, "path", "lookup.json");
    write_text_file(path, lookup_table_to_json(table).dump(2) + "\n");
    json r = {{"entries", table.entries().size()}, {"file", path}};
    emit(out, f.json_mode, r, {"entries: " + std::to_string(table.entries().size()), "wrote " + path});
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rate regions and optimal resource allocation for the cooperative half-duplex MAC", "mactc"};
    app.require_subcommand(1);
    Flags f;

    auto* region = app.add_subcommand("region", "Classical MAC, achievable envelope and outer bound frontiers");
    add_common(region, f);
    region->add_option("--alpha-step", f.alpha_step, "Phase grid step (default 0.05)");
    region->add_option("--power-points", f.power_points, "Power grid points per dimension (default 8)");
    region->add_option("--out", f.out, "Output file prefix (default region)");
    region->add_flag("--no-outer", f.no_outer, "Skip the outer bound");

    auto* maximize = app.add_subcommand("maximize", "Optimal allocation for the individual or sum rate");
    add_common(maximize, f);
    maximize->add_option("--search", f.search, "fixed, grid, interp, both or lookup (default fixed)");
    maximize->add_option("--step", f.step, "Grid step (default 0.01 individual, 0.02 sum)");
    maximize->add_option("--coarse-points", f.coarse_points, "Interpolation points L (default 8)");
    maximize->add_option("--t-points", f.t_points, "Interpolation points T along alpha2 (default L)");
    maximize->add_option("--table", f.table, "Lookup table file for --search lookup");
    maximize->add_flag("--symmetric", f.symmetric, "Symmetric channel: alpha1 = alpha2 for fixed, grid and interp searches");
    maximize->add_option("--out", f.out, "Also write the JSON result to this file");

    auto* map = app.add_subcommand("map", "Scheme map or rate profile over destination positions");
    add_common(map, f);
    map->add_option("--resolution", f.resolution, "Cells per axis (default 101)");
    map->add_option("--bounds", f.bounds, "xmin xmax ymin ymax (default -2 2 -2 2)")->expected(4);
    map->add_flag("--optimize-phases", f.optimize_phases, "Interpolated phase search per cell");
    map->add_option("--coarse-points", f.coarse_points, "Interpolation points per axis (default 8)");
    map->add_option("--line", f.line, "Rate profile along x0 y0 x1 y1 instead of a map")->expected(4);
    map->add_option("--samples", f.samples, "Profile samples (default 41)");
    map->add_option("--phase-step", f.phase_step, "Profile: grid-search phases with this step");
    map->add_option("--out", f.out, "Map CSV path (default map.csv)");
    map->add_option("--summary", f.summary, "Histogram JSON path (default map.json)");
    map->add_option("--profile-out", f.profile_out, "Profile CSV path (default profile.csv)");

    auto* gains = app.add_subcommand("gains", "Cooperation gains over the classical MAC");
    add_common(gains, f);
    gains->add_flag("--realized", f.realized, "Also run the phase search and report realized gains");
    gains->add_option("--step", f.step, "Phase step for --realized (default 0.01)");

    auto* oracle = app.add_subcommand("oracle", "Compare closed forms with the brute-force oracle");
    add_common(oracle, f);
    oracle->add_option("--points", f.power_points, "Oracle grid points per dimension (default 64)");
    oracle->add_option("--refine-rounds", f.refine_rounds, "Zoom passes after the first grid (default 4)");
    oracle->add_option("--refine-points", f.refine_points, "Points per dimension in zoom passes (default 16)");
    oracle->add_option("--alpha-step", f.alpha_step, "Phase step for --phase-search (default 0.05)");
    oracle->add_flag("--phase-search", f.phase_search, "Also search the phases");
    oracle->add_option("--tolerance", f.tolerance, "Allowed |closed form - oracle| (default 1e-3)");
    oracle->add_option("--golden", f.golden, "Write a golden record for the oracle result");
    oracle->add_option("--verify", f.verify, "Check a golden record's digest and rate");

    auto* table = app.add_subcommand("table", "Precompute a phase lookup table on a gain lattice");
    add_common(table, f);
    table->add_option("--g12-values", f.g12_list, "Lattice values of g12");
    table->add_option("--g21-values", f.g21_list, "Lattice values of g21 (default: g12)");
    table->add_option("--g10-values", f.g10_list, "Lattice values of g10");
    table->add_option("--g20-values", f.g20_list, "Lattice values of g20 (default: g10)");
    table->add_option("--p1-values", f.p1_list, "Lattice values of p1");
    table->add_option("--p2-values", f.p2_list, "Lattice values of p2 (default: p1)");
    table->add_option("--step", f.step, "Grid step of the per-entry search");
    table->add_option("--out", f.out, "Output file (default lookup.json)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (f.threads < 0) throw ParameterError("--threads must be >= 0");
        set_max_threads(f.threads);
        if (region->parsed()) return cmd_region(f, out);
        if (maximize->parsed()) return cmd_maximize(f, out);
        if (map->parsed()) return cmd_map(f, out);
        if (gains->parsed()) return cmd_gains(f, out);
        if (oracle->parsed()) return cmd_oracle(f, out);
        return cmd_table(f, out);
    } catch (const NumericalFailure& e) {
        err << "numerical failure: " << e.what() << "\n";
        if (!e.diagnostics().empty()) err << e.diagnostics() << "\n";
        return kExitNumerical;
    } catch (const InfeasibleAllocation& e) {
        err << "infeasible allocation: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::domain_error& e) {
        err << "invalid input: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const json::exception& e) {
        err << "invalid input: " << e.what() << "\n";
        return kExitInvalid;
    }
}

}  // namespace mactc
