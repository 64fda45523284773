#include "qcp/io.hpp"

#include <cstdio>

namespace qcp {

namespace {

using json = nlohmann::ordered_json;

void append_csv_line(std::string& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += cells[i];
  }
  out += '\n';
}

std::string reported_cell(const ChangePointReport& report) {
  if (report.kind() == ChangePointReport::Kind::Interval)
    return std::to_string(report.lo()) + ':' + std::to_string(report.hi());
  return std::to_string(report.exact_value());
}

}  // namespace

std::string to_string(Regime regime) {
  switch (regime) {
    case Regime::Orthogonal: return "orthogonal";
    case Regime::Nonorthogonal: return "nonorthogonal";
    case Regime::BellSet: return "bell";
  }
  throw std::logic_error("unknown regime");
}

std::string to_string(PriorsVariant variant) {
  return variant == PriorsVariant::FloorHalf ? "floor_half" : "midpoint";
}

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

json to_json(const SequenceInstance& seq) {
  json labels = json::array();
  for (StateLabel label : seq.labels()) labels.push_back(label.to_string());
  return json{{"n", seq.n()},
              {"k", seq.change_point()},
              {"mutation", seq.mutation()},
              {"labels", std::move(labels)}};
}

json to_json(const MeasurementRecord& record) {
  return json{{"position", record.position},
              {"kind", to_string(record.kind)},
              {"outcome", record.outcome},
              {"pairs_consumed", record.pairs_consumed}};
}

json to_json(const ChangePointReport& report) {
  switch (report.kind()) {
    case ChangePointReport::Kind::Exact:
      return json{{"kind", "exact"}, {"k", report.exact_value()}};
    case ChangePointReport::Kind::Interval:
      return json{{"kind", "interval"}, {"lo", report.lo()}, {"hi", report.hi()}};
    case ChangePointReport::Kind::NoChange:
      return json{{"kind", "no_change"}, {"k", report.exact_value()}};
  }
  throw std::logic_error("unknown report kind");
}

namespace {

json protocol_result_json(const ProtocolResult& result) {
  json pairs = json::array();
  for (const auto& [position, label] : result.distilled_pairs)
    pairs.push_back(json{{"position", position}, {"label", label.to_string()}});
  json transcript = json::array();
  for (const MeasurementRecord& record : result.transcript)
    transcript.push_back(to_json(record));
  return json{{"report", to_json(result.reported_change_point)},
              {"status", to_string(result.status)},
              {"consumed", result.consumed},
              {"distilled_default", result.distilled_default},
              {"distilled_mutation", result.distilled_mutation},
              {"residual_unknown", result.residual_unknown},
              {"distilled_pairs", std::move(pairs)},
              {"residual_positions", result.residual_positions},
              {"transcript", std::move(transcript)}};
}

}  // namespace

json to_json(const ProtocolResult& result) { return protocol_result_json(result); }

json to_json(const BellProtocolResult& result) {
  json j = protocol_result_json(result);
  j["reported_mutation"] =
      result.reported_mutation ? json(*result.reported_mutation) : json(nullptr);
  json trace = json::array();
  for (BranchTag tag : result.branch_trace) trace.push_back(to_string(tag));
  j["branch_trace"] = std::move(trace);
  return j;
}

json to_json(const StatsReport& report) {
  const TrialConfig& config = report.config;
  json config_json{{"regime", to_string(config.regime)},
                   {"n", config.n},
                   {"overlap", config.overlap},
                   {"trials", config.trials},
                   {"master_seed", config.master_seed}};
  config_json["change_point"] =
      config.fixed_change_point ? json(*config.fixed_change_point) : json("uniform");
  config_json["mutation"] =
      config.fixed_mutation ? json(*config.fixed_mutation) : json("uniform");
  config_json["priors"] = to_string(config.priors);

  json j{{"config", std::move(config_json)},
         {"trials", report.trials},
         {"mean_consumed", report.mean_consumed},
         {"stderr_consumed", report.stderr_consumed},
         {"mean_distilled", report.mean_distilled},
         {"stderr_distilled", report.stderr_distilled},
         {"identification_rate", report.identification_rate}};
  if (report.mutation_identification_rate)
    j["mutation_identification_rate"] = *report.mutation_identification_rate;
  j["status_histogram"] = json(report.status_histogram);
  json consumed = json::object();
  for (const auto& [value, count] : report.consumed_histogram)
    consumed[std::to_string(value)] = count;
  j["consumed_histogram"] = std::move(consumed);
  if (report.branch_totals) j["branch_totals"] = json(*report.branch_totals);
  return j;
}

std::string render_stats_json(const StatsReport& report) {
  return to_json(report).dump(2) + "\n";
}

std::string render_trials_csv(const StatsReport& report) {
  const bool bell = report.config.regime == Regime::BellSet;
  std::string out;
  out.reserve(64 * (report.rows.size() + 1));
  std::vector<std::string> header = {"n",        "k_true",           "k_reported",
                                     "consumed", "distilled_default", "distilled_mutation",
                                     "status"};
  if (bell)
    for (const char* extra : {"reported_mutation", "branch_a1", "branch_a1_1",
                              "branch_a1_2", "branch_a2"})
      header.emplace_back(extra);
  append_csv_line(out, header);

  for (const TrialRow& row : report.rows) {
    std::vector<std::string> cells = {std::to_string(row.n),
                                      std::to_string(row.k_true),
                                      reported_cell(row.reported),
                                      std::to_string(row.consumed),
                                      std::to_string(row.distilled_default),
                                      std::to_string(row.distilled_mutation),
                                      to_string(row.status)};
    if (bell) {
      int counts[4] = {0, 0, 0, 0};
      for (BranchTag tag : row.branch_trace) ++counts[static_cast<int>(tag)];
      cells.push_back(std::to_string(row.mutation_reported));
      cells.push_back(std::to_string(counts[static_cast<int>(BranchTag::A1)]));
      cells.push_back(std::to_string(counts[static_cast<int>(BranchTag::A1_1)]));
      cells.push_back(std::to_string(counts[static_cast<int>(BranchTag::A1_2)]));
      cells.push_back(std::to_string(counts[static_cast<int>(BranchTag::A2)]));
    }
    append_csv_line(out, cells);
  }
  return out;
}

std::string render_bounds_csv(const std::vector<BoundRow>& rows) {
  std::string out = "n,worst,best\n";
  for (const BoundRow& row : rows)
    append_csv_line(out, {std::to_string(row.n), std::to_string(row.worst),
                          std::to_string(row.best)});
  return out;
}

std::string render_recursion_csv(const std::vector<RecursionSweepRow>& rows) {
  std::string out = "s,n,N_bar,n_minus_N_bar,mc_mean_consumed,mc_stderr,trials\n";
  for (const RecursionSweepRow& row : rows) {
    std::vector<std::string> cells = {format_double(row.overlap), std::to_string(row.n),
                                      format_double(row.expected), format_double(row.saved)};
    if (row.mc_mean) {
      cells.push_back(format_double(*row.mc_mean));
      cells.push_back(format_double(*row.mc_stderr));
    } else {
      cells.emplace_back();
      cells.emplace_back();
    }
    cells.push_back(std::to_string(row.mc_trials));
    append_csv_line(out, cells);
  }
  return out;
}

std::string render_oracle_csv(const std::vector<OracleComparisonRow>& rows) {
  std::string out = "n,s,exact_mean,recursion_N_bar,abs_gap,mc_mean,mc_stderr\n";
  for (const OracleComparisonRow& row : rows)
    append_csv_line(out, {std::to_string(row.n), format_double(row.overlap),
                          format_double(row.exact_mean), format_double(row.recursion_value),
                          format_double(row.abs_gap), format_double(row.mc_mean),
                          format_double(row.mc_stderr)});
  return out;
}

std::string render_report(const StatsReport& report) {
  return report.config.format == OutputFormat::Json ? render_stats_json(report)
                                                    : render_trials_csv(report);
}

}  // namespace qcp
