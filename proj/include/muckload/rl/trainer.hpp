#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "muckload/env/environment.hpp"
#include "muckload/rl/ddpg.hpp"
#include "muckload/rl/evaluate.hpp"
#include "muckload/rl/ou_noise.hpp"
#include "muckload/rl/replay_buffer.hpp"

namespace muckload::rl {

struct TrainConfig {
    PolicyKind kind = PolicyKind::rld;
    std::uint64_t seed = 1;
    long long total_steps = 300'000;
    long long warmup_steps = 1'000;
    long long noise_decay_steps = 250'000;
    double noise_final_scale = 0.05;
    long long eval_every = 10'000;
    bool eval_deploy_filters = false;
    std::size_t buffer_capacity = 200'000;
    DdpgConfig ddpg;
    OuConfig ou;
    EvalConfig eval;

    void validate() const;
};

struct MetricRow {
    long long step = 0;
    double ar = 0.0;
    double aml = 0.0;
    double aff = 0.0;
    double asl = 0.0;

    bool operator==(const MetricRow&) const = default;
};

inline constexpr const char* kMetricsHeader = "step,AR,AML,AFF,ASL";

std::string format_metric_row(const MetricRow& row);
MetricRow parse_metric_row(const std::string& line);
void write_metrics_csv(std::ostream& os, const std::vector<MetricRow>& rows);
std::vector<MetricRow> read_metrics_csv(std::istream& is);
std::vector<MetricRow> read_metrics_csv(const std::filesystem::path& path);

struct TrainProgress {
    long long step = 0;
    const MetricRow* row = nullptr;  // set after an evaluation
};

/// DDPG training loop. With an output directory it persists metrics.csv, the
/// latest and final checkpoints, and a resume state after every evaluation.
class Trainer {
public:
    Trainer(TrainConfig cfg, env::EnvConfig env_cfg, std::filesystem::path out_dir = {});

    /// Rebuilds a trainer from the resume state in `out_dir`.
    static Trainer resume(TrainConfig cfg, env::EnvConfig env_cfg, const std::filesystem::path& out_dir);
    static bool can_resume(const std::filesystem::path& out_dir);

    /// Runs until `stop_at` (default: total_steps) training steps have been taken.
    void run(std::optional<long long> stop_at = std::nullopt,
             const std::function<void(const TrainProgress&)>& progress = {});

    long long step() const { return step_; }
    const Agent& agent() const { return agent_; }
    const std::vector<MetricRow>& history() const { return history_; }
    const ReplayBuffer& buffer() const { return buffer_; }
    const TrainConfig& config() const { return cfg_; }

    static constexpr const char* kLatestCheckpoint = "checkpoint_latest.lhdc";
    static constexpr const char* kFinalCheckpoint = "checkpoint_final.lhdc";
    static constexpr const char* kMetricsFile = "metrics.csv";
    static constexpr const char* kStateFile = "train_state.bin";

private:
    void begin_episode();
    void training_step();
    MetricRow run_evaluation();
    void persist(bool final) const;
    void write_state(std::ostream& os) const;
    void read_state(std::istream& is);

    TrainConfig cfg_;
    env::EnvConfig env_cfg_;
    std::filesystem::path out_dir_;
    env::Environment env_;
    Agent agent_;
    ReplayBuffer buffer_;
    OuNoise noise_;
    std::mt19937_64 noise_rng_;
    std::mt19937_64 sample_rng_;
    std::mt19937_64 episode_rng_;
    std::uint64_t episode_seed_ = 0;
    std::vector<env::Action> episode_actions_;
    env::Observation obs_{};
    long long step_ = 0;
    long long episodes_ = 0;
    std::vector<MetricRow> history_;
};

}  // namespace muckload::rl
