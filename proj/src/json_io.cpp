#include "mactc/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "mactc/errors.hpp"

namespace mactc {

void to_json(json& j, const ChannelGains& v) {
    j = {{"g12", v.g12}, {"g21", v.g21}, {"g10", v.g10}, {"g20", v.g20}, {"p1", v.p1}, {"p2", v.p2}};
}
void from_json(const json& j, ChannelGains& v) {
    v = {j.at("g12").get<double>(), j.at("g21").get<double>(), j.at("g10").get<double>(),
         j.at("g20").get<double>(), j.at("p1").get<double>(),  j.at("p2").get<double>()};
    v.validate();
}

void to_json(json& j, const PhaseDurations& v) {
    j = {{"alpha1", v.alpha1}, {"alpha2", v.alpha2}, {"alpha3", v.alpha3}};
}
void from_json(const json& j, PhaseDurations& v) {
    v = PhaseDurations::make(j.at("alpha1").get<double>(), j.value("alpha2", 0.0));
    if (j.contains("alpha3") && std::abs(j["alpha3"].get<double>() - v.alpha3) > 1e-12)
        throw ParameterError("alpha3 inconsistent with alpha1 and alpha2");
}

void to_json(json& j, const PowerAllocation& v) {
    j = {{"rho11", v.rho11}, {"rho22", v.rho22}, {"rho10", v.rho10},
         {"rho20", v.rho20}, {"rho13", v.rho13}, {"rho23", v.rho23}};
}
void from_json(const json& j, PowerAllocation& v) {
    v = {j.at("rho11").get<double>(), j.at("rho22").get<double>(), j.at("rho10").get<double>(),
         j.at("rho20").get<double>(), j.at("rho13").get<double>(), j.at("rho23").get<double>()};
}

void to_json(json& j, const RateConstraints& v) {
    j = {{"i1", v.i1}, {"i2", v.i2}, {"i3", v.i3}, {"i4", v.i4}, {"i5", v.i5}, {"i6", v.i6}, {"i7", v.i7},
         {"i8", v.i8}, {"zeta", v.zeta}, {"j1", v.j1}, {"j2", v.j2}, {"s1", v.s1}, {"s2", v.s2},
         {"s3", v.s3}, {"s4", v.s4}};
}
void from_json(const json& j, RateConstraints& v) {
    double* f[] = {&v.i1, &v.i2, &v.i3, &v.i4, &v.i5, &v.i6, &v.i7, &v.i8,
                   &v.zeta, &v.j1, &v.j2, &v.s1, &v.s2, &v.s3, &v.s4};
    const char* k[] = {"i1", "i2", "i3", "i4", "i5", "i6", "i7", "i8", "zeta", "j1", "j2", "s1", "s2", "s3", "s4"};
    for (int i = 0; i < 15; ++i) *f[i] = j.at(k[i]).get<double>();
}

void to_json(json& j, const RatePoint& v) { j = {{"r1", v.r1}, {"r2", v.r2}}; }
void from_json(const json& j, RatePoint& v) { v = {j.at("r1").get<double>(), j.at("r2").get<double>()}; }

void to_json(json& j, const RateRegion& v) {
    j = {{"j1", v.j1}, {"j2", v.j2}, {"smin", v.smin}, {"corners", v.corners}};
}
void from_json(const json& j, RateRegion& v) {
    v = region_from_constraints(j.at("j1").get<double>(), j.at("j2").get<double>(), j.at("smin").get<double>());
}

void to_json(json& j, const IndividualSolution& v) {
    j = {{"rate", v.rate},
         {"alpha1", v.alpha1},
         {"allocation", v.allocation},
         {"case_id", std::string(to_string(v.case_id))},
         {"kkt_residual", v.kkt_residual},
         {"relay_limited", v.relay_limited},
         {"fallback", v.fallback},
         {"diagnostics", v.diagnostics}};
}
void from_json(const json& j, IndividualSolution& v) {
    v.rate = j.at("rate").get<double>();
    v.alpha1 = j.at("alpha1").get<double>();
    v.allocation = j.at("allocation").get<PowerAllocation>();
    const auto c = individual_case_from_string(j.at("case_id").get<std::string>());
    if (!c) throw ParameterError("unknown individual case");
    v.case_id = *c;
    v.kkt_residual = j.at("kkt_residual").get<double>();
    v.relay_limited = j.value("relay_limited", false);
    v.fallback = j.value("fallback", false);
    v.diagnostics = j.value("diagnostics", std::string());
}

void to_json(json& j, const SumSolution& v) {
    j = {{"sum_rate", v.sum_rate},
         {"phases", v.phases},
         {"allocation", v.allocation},
         {"case_id", std::string(to_string(v.case_id))},
         {"kkt_residual", v.kkt_residual},
         {"s4_only", v.s4_only},
         {"fallback", v.fallback},
         {"diagnostics", v.diagnostics}};
}
void from_json(const json& j, SumSolution& v) {
    v.sum_rate = j.at("sum_rate").get<double>();
    v.phases = j.at("phases").get<PhaseDurations>();
    v.allocation = j.at("allocation").get<PowerAllocation>();
    const auto c = sum_case_from_string(j.at("case_id").get<std::string>());
    if (!c) throw ParameterError("unknown sum case");
    v.case_id = *c;
    v.kkt_residual = j.at("kkt_residual").get<double>();
    v.s4_only = j.value("s4_only", false);
    v.fallback = j.value("fallback", false);
    v.diagnostics = j.value("diagnostics", std::string());
}

void to_json(json& j, const GainReport& v) {
    j = {{"delta_r1", v.delta_r1},   {"delta_r2", v.delta_r2},   {"delta_sum", v.delta_sum},
         {"finite_r1", v.finite_r1}, {"finite_r2", v.finite_r2}, {"finite_sum", v.finite_sum}};
}
void from_json(const json& j, GainReport& v) {
    v = {j.at("delta_r1").get<double>(),  j.at("delta_r2").get<double>(),  j.at("delta_sum").get<double>(),
         j.at("finite_r1").get<double>(), j.at("finite_r2").get<double>(), j.at("finite_sum").get<double>()};
}

void to_json(json& j, const AugmentedResult& v) {
    j = {{"dag1", v.dag1}, {"dag2", v.dag2}, {"rate_augmented", v.rate_augmented}, {"rate_main", v.rate_main}};
}
void from_json(const json& j, AugmentedResult& v) {
    v = {j.at("dag1").get<double>(), j.at("dag2").get<double>(), j.at("rate_augmented").get<double>(),
         j.at("rate_main").get<double>()};
}

void to_json(json& j, const OracleConfig& v) {
    j = {{"power_grid_points", v.power_grid_points},
         {"alpha_step", v.alpha_step},
         {"objective", std::string(to_string(v.objective))},
         {"refine_rounds", v.refine_rounds},
         {"refine_points", v.refine_points}};
}
void from_json(const json& j, OracleConfig& v) {
    OracleConfig d;
    v.power_grid_points = j.value("power_grid_points", d.power_grid_points);
    v.alpha_step = j.value("alpha_step", d.alpha_step);
    const std::string obj = j.value("objective", std::string(to_string(d.objective)));
    if (obj == "IndividualR1")
        v.objective = Objective::IndividualR1;
    else if (obj == "SumRate")
        v.objective = Objective::SumRate;
    else
        throw ParameterError("unknown objective " + obj);
    v.refine_rounds = j.value("refine_rounds", d.refine_rounds);
    v.refine_points = j.value("refine_points", d.refine_points);
    v.validate();
}

void to_json(json& j, const OracleResult& v) {
    j = {{"rate", v.rate}, {"phases", v.phases}, {"allocation", v.allocation}};
}
void from_json(const json& j, OracleResult& v) {
    v.rate = j.at("rate").get<double>();
    v.phases = j.at("phases").get<PhaseDurations>();
    v.allocation = j.at("allocation").get<PowerAllocation>();
}

void to_json(json& j, const PhaseSample& v) { j = {{"alphas", v.alphas}, {"rate", v.rate}}; }
void from_json(const json& j, PhaseSample& v) {
    v.alphas = j.at("alphas").get<PhaseDurations>();
    v.rate = j.at("rate").get<double>();
}

void to_json(json& j, const PhaseSearchResult& v) {
    j = {{"best_alphas", v.best_alphas},
         {"best_rate", v.best_rate},
         {"method", std::string(to_string(v.method))},
         {"samples", v.samples},
         {"approx_error_bound", v.approx_error_bound ? json(*v.approx_error_bound) : json(nullptr)},
         {"allocation", v.allocation},
         {"case_id", v.case_id},
         {"kkt_residual", v.kkt_residual},
         {"fallback", v.fallback}};
}
void from_json(const json& j, PhaseSearchResult& v) {
    v.best_alphas = j.at("best_alphas").get<PhaseDurations>();
    v.best_rate = j.at("best_rate").get<double>();
    const std::string m = j.at("method").get<std::string>();
    if (m != "Grid" && m != "Interpolated") throw ParameterError("unknown search method " + m);
    v.method = m == "Grid" ? SearchMethod::Grid : SearchMethod::Interpolated;
    v.samples = j.value("samples", std::vector<PhaseSample>{});
    if (j.contains("approx_error_bound") && !j["approx_error_bound"].is_null())
        v.approx_error_bound = j["approx_error_bound"].get<double>();
    else
        v.approx_error_bound.reset();
    v.allocation = j.at("allocation").get<PowerAllocation>();
    v.case_id = j.at("case_id").get<std::string>();
    v.kkt_residual = j.at("kkt_residual").get<double>();
    v.fallback = j.value("fallback", false);
}

void to_json(json& j, const LookupEntry& v) {
    j = {{"g12", v.ch.g12}, {"g21", v.ch.g21}, {"g10", v.ch.g10},       {"g20", v.ch.g20}, {"p1", v.ch.p1},
         {"p2", v.ch.p2},   {"alpha1", v.alpha1}, {"alpha2", v.alpha2}, {"rate", v.rate}};
}
void from_json(const json& j, LookupEntry& v) {
    v.ch = j.get<ChannelGains>();
    v.alpha1 = j.at("alpha1").get<double>();
    v.alpha2 = j.at("alpha2").get<double>();
    v.rate = j.at("rate").get<double>();
}

void to_json(json& j, const Point2& v) { j = json::array({v.x, v.y}); }
void from_json(const json& j, Point2& v) {
    if (!j.is_array() || j.size() != 2) throw ParameterError("point must be [x, y]");
    v = {j[0].get<double>(), j[1].get<double>()};
}

void to_json(json& j, const Topology& v) {
    j = {{"user1", v.user1}, {"user2", v.user2}, {"dest", v.dest}, {"gamma", v.gamma}};
}
void from_json(const json& j, Topology& v) {
    Topology d;
    v.user1 = j.value("user1", d.user1);
    v.user2 = j.value("user2", d.user2);
    v.dest = j.value("dest", d.dest);
    v.gamma = j.value("gamma", d.gamma);
}

void to_json(json& j, const Bounds& v) {
    j = {{"xmin", v.xmin}, {"xmax", v.xmax}, {"ymin", v.ymin}, {"ymax", v.ymax}};
}
void from_json(const json& j, Bounds& v) {
    Bounds d;
    v = {j.value("xmin", d.xmin), j.value("xmax", d.xmax), j.value("ymin", d.ymin), j.value("ymax", d.ymax)};
}

void to_json(json& j, const SchemeMap& v) {
    j = {{"bounds", v.bounds},
         {"resolution", v.resolution},
         {"objective", std::string(to_string(v.objective))},
         {"histogram", v.histogram()}};
}

json lookup_table_to_json(const LookupTable& t) { return json(t.entries()); }

LookupTable lookup_table_from_json(const json& j) {
    if (!j.is_array()) throw ParameterError("lookup table must be a JSON array");
    return LookupTable(j.get<std::vector<LookupEntry>>());
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParameterError(path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParameterError("cannot write " + path);
    out << text;
}

}  // namespace mactc
