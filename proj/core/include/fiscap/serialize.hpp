#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "fiscap/citizen.hpp"
#include "fiscap/elite.hpp"
#include "fiscap/fiscal.hpp"
#include "fiscap/oracle.hpp"
#include "fiscap/sim.hpp"

namespace fiscap {

using ordered_json = nlohmann::ordered_json;

// Floats are emitted with 9 significant digits everywhere (JSON and CSV), so
// identical values always serialize to identical bytes and golden files stay
// stable across platforms.
std::string format_double(double value);

// Canonical writer: insertion-ordered keys, two-space indent, %.9g floats.
// Parsing the output and re-dumping it reproduces the bytes exactly.
std::string dump_canonical(const ordered_json& value);

ordered_json to_json(const ModelParams& params);
ordered_json to_json(const ReportOutcome& outcome);
ordered_json to_json(const LafferPoint& point);
ordered_json to_json(const std::vector<LafferPoint>& points);
ordered_json to_json(const StaticRegion& region);
ordered_json to_json(const AllocationDecision& decision);
ordered_json to_json(const ThresholdSet& thresholds);
ordered_json to_json(const EquilibriumClass& equilibrium);
ordered_json to_json(const OracleReport& report);
ordered_json to_json(const std::vector<OracleReport>& reports);
ordered_json to_json(const Trajectory& trajectory);

// CSV emitters, one header row each, matching the documented column sets.
std::string to_csv(const std::vector<LafferPoint>& points);     // t,revenue,report
std::string to_csv(const std::vector<OracleReport>& reports);   // target,closed_form,oracle,abs_err,passed
std::string to_csv(const Trajectory& trajectory);  // period,alpha,g,posterior,report,tax_base,tag

}  // namespace fiscap
