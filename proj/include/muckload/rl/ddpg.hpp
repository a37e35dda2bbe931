#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "muckload/rl/adam.hpp"
#include "muckload/rl/mlp.hpp"
#include "muckload/rl/replay_buffer.hpp"

namespace muckload::rl {

enum class PolicyKind : std::uint8_t { rlc = 0, rld = 1 };

std::string to_string(PolicyKind kind);
PolicyKind policy_kind_from_string(const std::string& name);

struct DdpgConfig {
    double actor_lr = 1e-4;
    double critic_lr = 1e-3;
    double gamma = 0.99;
    double tau = 0.001;
    std::size_t batch_size = 256;
    std::vector<int> actor_hidden{256, 128};
    std::vector<int> critic_hidden{256, 128};
    double final_layer_scale = 3e-3;
    double reward_scale = 0.01;  // critic learns Q * reward_scale
    AdamConfig adam;

    void validate() const;
};

struct Agent {
    PolicyKind kind = PolicyKind::rlc;
    MlpParams actor;
    MlpParams critic;
    MlpParams actor_target;
    MlpParams critic_target;
    AdamState actor_opt;
    AdamState critic_opt;

    int obs_dim() const { return actor.input_dim(); }
    int action_dim() const { return actor.output_dim(); }
    bool operator==(const Agent&) const = default;
};

/// Actor: obs -> hidden (ReLU) -> tanh. Critic: obs -> hidden (ReLU) with the
/// action joined at the first hidden layer -> linear scalar. Targets start as copies.
Agent make_agent(int obs_dim, int action_dim, PolicyKind kind, const DdpgConfig& cfg, std::mt19937_64& rng);

Vector act(const Agent& agent, const Vector& obs);
double q_value(const MlpParams& critic, const Vector& obs, const Vector& action);

struct UpdateStats {
    double critic_loss = 0.0;
    double mean_q = 0.0;
};

/// One critic step, one actor step, then soft target updates.
UpdateStats ddpg_update(Agent& agent, const Batch& batch, const DdpgConfig& cfg);

/// Bellman targets in critic units: s * r + gamma * (1 - done) * Q'(o', pi'(o')).
Vector critic_targets(const Agent& agent, const Batch& batch, double gamma, double reward_scale = 1.0);

}  // namespace muckload::rl
