#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "muckload/harness/trial.hpp"

namespace muckload::harness {

struct ExperimentSpec {
    Controller controller = Controller::rld;
    std::vector<double> slopes{15.0, 20.0, 25.0, 30.0};  // deg
    Material material = Material::homogeneous;
    int trials = 5;  // per slope
    double error = 0.0;  // deg, added to the observed slope
    std::uint64_t seed = 1;
    bool deploy_filters = true;
    bool write_logs = true;

    void validate() const;
};

/// TOML keys: controller, slopes, material, trials, error_deg, seed,
/// deploy_filters, write_logs.
ExperimentSpec parse_experiment_spec(std::string_view toml_text, std::string_view source = "spec");
ExperimentSpec load_experiment_spec(const std::filesystem::path& path);

/// Pile seed of trial k on a slope; the same for every controller.
std::uint64_t trial_seed(std::uint64_t base, double slope_deg, int k);

struct Stat {
    double mean = 0.0;
    double std = 0.0;  // sample standard deviation, 0 for a single value
};

/// Mean and sample std; NaN for an empty set.
Stat describe(const std::vector<double>& xs);

/// Table row for one slope, or for all slopes pooled (cell "mean").
/// Material, time and drift statistics use successful trials only.
struct AggregateRow {
    std::string controller;
    std::string cell;
    int trials = 0;
    int successes = 0;
    int timeouts = 0;
    double success_rate = 0.0;
    double timeout_rate = 0.0;
    Stat material;
    Stat time;
    Stat frontal;
    Stat rear;
};

inline constexpr const char* kAggregateHeader =
    "controller,cell,trials,successes,timeouts,success_rate,timeout_rate,material_mean,material_std,time_mean,"
    "time_std,frontal_mean,frontal_std,rear_mean,rear_std";

/// Rows in first-seen slope order followed by the pooled row. Invalid
/// (aborted) trials are ignored.
std::vector<AggregateRow> aggregate_trials(const std::vector<TrialRecord>& trials);

std::string format_aggregate_row(const AggregateRow& r);
AggregateRow parse_aggregate_row(const std::string& line);
void write_aggregates_csv(std::ostream& os, const std::vector<AggregateRow>& rows);
std::vector<AggregateRow> read_aggregates_csv(std::istream& is);

struct TrialTrace {
    TrialRecord record;
    std::vector<Point2> tip_path;
};

struct ExperimentResult {
    std::vector<TrialTrace> trials;
    std::vector<AggregateRow> aggregates;

    std::vector<TrialRecord> records() const;
};

/// Runs every (slope, trial) cell on a pool of `workers` threads (0 = one per
/// hardware thread). Output is independent of the worker count. With an
/// output directory it writes trials.csv, aggregates.csv, plot_data.json and
/// per-trial logs under logs/.
ExperimentResult run_experiment(const ExperimentSpec& spec, const ConfigSource& cfg, const rl::Agent* agent,
                                const std::optional<std::filesystem::path>& out_dir, int workers = 0);

/// Errors from {0, +-5, +-10, +-15} deg that keep the observed slope in range.
std::vector<double> sweep_errors(double base_slope);

struct SweepRow {
    std::string policy;
    double base_slope = 0.0;
    double error = 0.0;
    AggregateRow summary;
};

inline constexpr const char* kSweepHeader =
    "policy,base_slope,error,observed_slope,trials,successes,timeouts,success_rate,timeout_rate,material_mean,"
    "material_std,time_mean,time_std,frontal_mean,frontal_std,rear_mean,rear_std";

std::string format_sweep_row(const SweepRow& r);

struct SweepPolicy {
    Controller controller;
    const rl::Agent* agent;
};

/// Slope-observation error study at one base slope. An error that moves the
/// observed slope outside the slope range raises ConfigError.
std::vector<SweepRow> run_slope_error_sweep(double base_slope, const std::vector<double>& errors,
                                            const std::vector<SweepPolicy>& policies, const ConfigSource& cfg,
                                            int trials, std::uint64_t seed,
                                            const std::optional<std::filesystem::path>& out_dir, int workers = 0);

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

}  // namespace muckload::harness
