#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qcp/harness.hpp"
#include "qcp/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitCapacity = 3;

std::optional<int> parse_pin(const std::string& text, const char* what) {
  if (text == "uniform") return std::nullopt;
  std::size_t consumed = 0;
  int value = 0;
  try {
    value = std::stoi(text, &consumed);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(what) + " must be 'uniform' or an integer");
  }
  if (consumed != text.size())
    throw std::invalid_argument(std::string(what) + " must be 'uniform' or an integer");
  return value;
}

qcp::OutputFormat parse_format(const std::string& text) {
  if (text == "json") return qcp::OutputFormat::Json;
  if (text == "csv") return qcp::OutputFormat::Csv;
  throw std::invalid_argument("format must be 'json' or 'csv'");
}

qcp::PriorsVariant parse_priors(const std::string& text) {
  if (text == "floor_half") return qcp::PriorsVariant::FloorHalf;
  if (text == "midpoint") return qcp::PriorsVariant::MidpointCount;
  throw std::invalid_argument("priors must be 'floor_half' or 'midpoint'");
}

void write_output(const std::string& path, const std::string& payload) {
  if (path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << payload;
  if (!out) throw std::runtime_error("failed writing output file: " + path);
}

struct BatchOpts {
  int n = 16;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  std::string change_point = "uniform";
  std::string mutation = "uniform";
  double overlap = 0.5;
  std::string out_path;
  std::string format = "json";
  std::string priors = "floor_half";
};

void add_batch_flags(CLI::App& cmd, BatchOpts& o, bool with_overlap, bool with_mutation) {
  cmd.add_option("--n", o.n, "number of pairs the source emits");
  cmd.add_option("--trials", o.trials, "number of independent trials");
  cmd.add_option("--seed", o.seed, "master seed; trial t derives its own stream from it");
  cmd.add_option("--change-point", o.change_point, "'uniform' or a pinned position in [1, n+1]");
  if (with_overlap)
    cmd.add_option("--overlap", o.overlap, "state overlap s in (0, 1]; 1 makes every measurement fail");
  if (with_mutation)
    cmd.add_option("--mutation", o.mutation, "'uniform' or a pinned mutation index");
  cmd.add_option("--out", o.out_path, "output file (default: stdout)");
  cmd.add_option("--format", o.format, "'json' (aggregate report) or 'csv' (per-trial rows)");
  cmd.add_option("--priors", o.priors, "window priors rule: 'floor_half' or 'midpoint'");
}

int run_batch(qcp::Regime regime, const BatchOpts& o) {
  qcp::TrialConfig config;
  config.regime = regime;
  config.n = o.n;
  config.overlap = regime == qcp::Regime::Nonorthogonal ? o.overlap : 0.0;
  config.trials = o.trials;
  config.master_seed = o.seed;
  config.fixed_change_point = parse_pin(o.change_point, "--change-point");
  config.fixed_mutation = parse_pin(o.mutation, "--mutation");
  config.format = parse_format(o.format);
  config.priors = parse_priors(o.priors);
  const qcp::StatsReport report = qcp::run_trials(config);
  write_output(o.out_path, qcp::render_report(report));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LOCC change-point search and distillation simulator"};
  app.require_subcommand(1);

  BatchOpts orth, nonorth, bell;
  CLI::App* cmd_orth = app.add_subcommand("orthogonal", "binary search with perfectly distinguishable states");
  add_batch_flags(*cmd_orth, orth, false, false);
  CLI::App* cmd_nonorth = app.add_subcommand("nonorthogonal", "search driven by unambiguous discrimination");
  add_batch_flags(*cmd_nonorth, nonorth, true, false);
  CLI::App* cmd_bell = app.add_subcommand("bell", "Bell-alphabet search with three possible mutations");
  add_batch_flags(*cmd_bell, bell, false, true);

  struct {
    int n = 64;
    double overlap = -1.0;  // < 0 means sweep the default grid
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::string out_path;
    std::string priors = "floor_half";
  } rec;
  CLI::App* cmd_rec = app.add_subcommand("recursion", "expected-consumption table N_bar(n, s)");
  cmd_rec->add_option("--n", rec.n, "number of pairs");
  cmd_rec->add_option("--overlap", rec.overlap, "single overlap; omit to sweep s = 0.05..0.95");
  cmd_rec->add_option("--trials", rec.trials, "Monte Carlo trials per row (0 disables the MC columns)");
  cmd_rec->add_option("--seed", rec.seed, "master seed for the MC columns");
  cmd_rec->add_option("--out", rec.out_path, "output file (default: stdout)");
  cmd_rec->add_option("--priors", rec.priors, "window priors rule: 'floor_half' or 'midpoint'");

  struct {
    int n = 1024;
    std::string out_path;
  } bounds;
  CLI::App* cmd_bounds = app.add_subcommand("bounds", "worst/best measurement counts up to n");
  cmd_bounds->add_option("--n", bounds.n, "largest sequence length tabulated");
  cmd_bounds->add_option("--out", bounds.out_path, "output file (default: stdout)");

  struct {
    std::vector<int> sizes;
    std::vector<double> overlaps;
    std::uint64_t trials = 10000;
    std::uint64_t seed = 0;
    std::string out_path;
    std::string priors = "floor_half";
  } oracle;
  CLI::App* cmd_oracle = app.add_subcommand("oracle", "exact process mean vs recursion vs Monte Carlo");
  cmd_oracle->add_option("--n", oracle.sizes, "sequence lengths (repeatable)");
  cmd_oracle->add_option("--overlap", oracle.overlaps, "overlaps (repeatable)");
  cmd_oracle->add_option("--trials", oracle.trials, "Monte Carlo trials per row");
  cmd_oracle->add_option("--seed", oracle.seed, "master seed for the MC columns");
  cmd_oracle->add_option("--out", oracle.out_path, "output file (default: stdout)");
  cmd_oracle->add_option("--priors", oracle.priors, "window priors rule: 'floor_half' or 'midpoint'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (cmd_orth->parsed()) return run_batch(qcp::Regime::Orthogonal, orth);
    if (cmd_nonorth->parsed()) return run_batch(qcp::Regime::Nonorthogonal, nonorth);
    if (cmd_bell->parsed()) return run_batch(qcp::Regime::BellSet, bell);
    if (cmd_rec->parsed()) {
      std::vector<double> grid;
      if (rec.overlap >= 0.0) {
        grid.push_back(rec.overlap);
      } else {
        for (int i = 1; i <= 19; ++i) grid.push_back(static_cast<double>(i) * 0.05);
      }
      const auto rows = qcp::build_recursion_sweep(rec.n, grid, rec.trials, rec.seed,
                                                   parse_priors(rec.priors));
      write_output(rec.out_path, qcp::render_recursion_csv(rows));
      return kExitOk;
    }
    if (cmd_bounds->parsed()) {
      write_output(bounds.out_path,
                   qcp::render_bounds_csv(qcp::iterate_bound_recurrences(bounds.n)));
      return kExitOk;
    }
    if (cmd_oracle->parsed()) {
      if (oracle.sizes.empty())
        for (int n = 1; n <= 10; ++n) oracle.sizes.push_back(n);
      if (oracle.overlaps.empty()) oracle.overlaps = {0.3, 0.6};
      const auto rows = qcp::build_oracle_comparison(oracle.sizes, oracle.overlaps,
                                                     oracle.trials, oracle.seed,
                                                     parse_priors(oracle.priors));
      write_output(oracle.out_path, qcp::render_oracle_csv(rows));
      return kExitOk;
    }
  } catch (const qcp::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::out_of_range& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitOk;
}
