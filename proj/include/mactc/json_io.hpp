#pragma once

#include <string>

#include "json.hpp"

#include "mactc/channel_model.hpp"
#include "mactc/individual_optimizer.hpp"
#include "mactc/oracle.hpp"
#include "mactc/phase_optimizer.hpp"
#include "mactc/planner.hpp"
#include "mactc/rate_region.hpp"
#include "mactc/sum_optimizer.hpp"

namespace mactc {

using nlohmann::json;

void to_json(json& j, const ChannelGains& v);
void from_json(const json& j, ChannelGains& v);
void to_json(json& j, const PhaseDurations& v);
void from_json(const json& j, PhaseDurations& v);
void to_json(json& j, const PowerAllocation& v);
void from_json(const json& j, PowerAllocation& v);
void to_json(json& j, const RateConstraints& v);
void from_json(const json& j, RateConstraints& v);

void to_json(json& j, const RatePoint& v);
void from_json(const json& j, RatePoint& v);
void to_json(json& j, const RateRegion& v);
void from_json(const json& j, RateRegion& v);

void to_json(json& j, const IndividualSolution& v);
void from_json(const json& j, IndividualSolution& v);
void to_json(json& j, const SumSolution& v);
void from_json(const json& j, SumSolution& v);
void to_json(json& j, const GainReport& v);
void from_json(const json& j, GainReport& v);
void to_json(json& j, const AugmentedResult& v);
void from_json(const json& j, AugmentedResult& v);

void to_json(json& j, const OracleConfig& v);
void from_json(const json& j, OracleConfig& v);
void to_json(json& j, const OracleResult& v);
void from_json(const json& j, OracleResult& v);

void to_json(json& j, const PhaseSample& v);
void from_json(const json& j, PhaseSample& v);
void to_json(json& j, const PhaseSearchResult& v);
void from_json(const json& j, PhaseSearchResult& v);
void to_json(json& j, const LookupEntry& v);
void from_json(const json& j, LookupEntry& v);

void to_json(json& j, const Point2& v);
void from_json(const json& j, Point2& v);
void to_json(json& j, const Topology& v);
void from_json(const json& j, Topology& v);
void to_json(json& j, const Bounds& v);
void from_json(const json& j, Bounds& v);
// Summary only: bounds, resolution, objective, histogram.
void to_json(json& j, const SchemeMap& v);

// Lookup-table file: flat array of {g12, g21, g10, g20, p1, p2, alpha1, alpha2, rate}.
json lookup_table_to_json(const LookupTable& t);
LookupTable lookup_table_from_json(const json& j);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace mactc
