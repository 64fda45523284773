#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "qcp/harness.hpp"
#include "qcp/model.hpp"
#include "qcp/oracle.hpp"
#include "qcp/result.hpp"

namespace qcp {

std::string to_string(Regime regime);
std::string to_string(PriorsVariant variant);

/// Round-trip-exact decimal rendering, used for every floating-point cell in
/// the CSV outputs so that identical runs produce identical bytes.
std::string format_double(double value);

nlohmann::ordered_json to_json(const SequenceInstance& seq);
nlohmann::ordered_json to_json(const MeasurementRecord& record);
nlohmann::ordered_json to_json(const ChangePointReport& report);
nlohmann::ordered_json to_json(const ProtocolResult& result);
nlohmann::ordered_json to_json(const BellProtocolResult& result);
nlohmann::ordered_json to_json(const StatsReport& report);

/// Pretty-printed aggregate report, key order fixed.
std::string render_stats_json(const StatsReport& report);

/// One line per trial. Columns:
///   n,k_true,k_reported,consumed,distilled_default,distilled_mutation,status
/// Bell-set batches append:
///   reported_mutation,branch_a1,branch_a1_1,branch_a1_2,branch_a2
/// k_reported is an integer for exact and no-change reports (n+1 encodes no
/// change) and "lo:hi" for interval reports.
std::string render_trials_csv(const StatsReport& report);

std::string render_bounds_csv(const std::vector<BoundRow>& rows);
std::string render_recursion_csv(const std::vector<RecursionSweepRow>& rows);
std::string render_oracle_csv(const std::vector<OracleComparisonRow>& rows);

/// Dispatches on report.config.format.
std::string render_report(const StatsReport& report);

}  // namespace qcp
