#pragma once

#include <string>

#include "json.hpp"
#include "momentlab/continuation.hpp"
#include "momentlab/growth.hpp"
#include "momentlab/spectrum.hpp"
#include "momentlab/tracking.hpp"

namespace momentlab {

// Insertion-ordered JSON so emitted documents have a stable key order.
using Json = nlohmann::ordered_json;

std::string kind_name(PointKind k);          // "endpoint-0" | "endpoint-1" | "critical-value"
std::string method_name(FMethod m);          // "series" | "quadrature" | "partial-fraction"
std::string method_name(GrowthMethod m);     // "slope-fit" | "windowed-root-max" | "ratio-subsequence"

// Shortest round-trip decimal text for a double (CSV cells and log lines).
std::string double_text(double x);

// {"elements":[{"re":..,"im":..,"radius":..,"kinds":[..]},...],"max_modulus":..}
Json critical_set_json(const CriticalSet& s);

// {"t":[re,im],"value":[re,im],"method":..,"error_estimate":..}
Json f_value_json(const FValue& v);

// {"estimate":..,"method":..,"window":[lo,hi],"nonzero_count":..,"diagnostics":..}
Json growth_json(const GrowthEstimate& g);

// One trace line: {"tau":[re,im],"roots":[[re,im],..],"logs":[[re,im],..],
// "branch_offsets":[..]}
Json bundle_json(const RootBundle& b);

// First line of a trace stream; records the detour convention the path
// planner used so a stored trace is self-describing.
Json trace_header(const std::string& poly_text, double clearance);

}  // namespace momentlab
