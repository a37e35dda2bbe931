#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "muckload/env/environment.hpp"
#include "muckload/rl/ddpg.hpp"

namespace muckload::rl {

using Policy = std::function<env::Action(const env::Observation&)>;

struct EpisodeRecord {
    std::uint64_t seed = 0;
    double slope = 0.0;  // rad
    double ret = 0.0;    // undiscounted
    double load = 0.0;   // kg, final
    double pitch = 0.0;  // rad, final
    int success_level = 0;
    env::Status status = env::Status::running;
    int steps = 0;
    double drift_front = 0.0;  // fraction of steps
    double drift_rear = 0.0;

    bool operator==(const EpisodeRecord&) const = default;
};

struct Metrics {
    double ar = 0.0;
    double aml = 0.0;
    double aff = 0.0;
    double asl = 0.0;
    std::vector<EpisodeRecord> episodes;
};

struct EvalConfig {
    int episodes = 120;
    std::uint64_t seed_base = 1'000'000'007ULL;
    env::Mode mode = env::Mode::rlc_train;
    double bucket_capacity = 30.0;  // kg
    double pitch_threshold = 40.0;  // deg
};

/// Seed of evaluation episode k; independent of the training seed stream.
std::uint64_t evaluation_seed(std::uint64_t base, int k);

EpisodeRecord run_episode(env::Environment& env, const Policy& policy, std::uint64_t seed, env::Mode mode,
                          double pitch_threshold_deg);

Metrics evaluate(const Policy& policy, const env::EnvConfig& env_cfg, const EvalConfig& cfg);

Metrics aggregate(std::vector<EpisodeRecord> episodes, double bucket_capacity);

/// Deterministic actor policy.
Policy actor_policy(const Agent& agent);

/// Training-mode step filter for a policy kind, and its deployment counterpart.
env::Mode train_mode(PolicyKind kind);
env::Mode deploy_mode(PolicyKind kind);

}  // namespace muckload::rl
