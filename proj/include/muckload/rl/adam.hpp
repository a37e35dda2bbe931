#pragma once

#include "muckload/rl/mlp.hpp"

namespace muckload::rl {

struct AdamConfig {
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
};

struct AdamState {
    std::vector<Matrix> m_weight, v_weight;
    std::vector<Vector> m_bias, v_bias;
    long long t = 0;

    static AdamState zeros_like(const MlpParams& p);
    bool operator==(const AdamState&) const = default;
};

void adam_step(MlpParams& params, const Gradients& grads, AdamState& state, double lr,
               const AdamConfig& cfg = {});

}  // namespace muckload::rl
