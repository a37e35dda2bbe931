#pragma once

#include <array>
#include <random>
#include <string>

namespace muckload::rl {

struct OuConfig {
    double mu = 0.0;
    double sigma = 0.4;
    double theta = 0.15;
    double dt = 0.2;
};

/// Ornstein-Uhlenbeck process, one independent channel per action dimension.
class OuNoise {
public:
    static constexpr std::size_t kDim = 3;
    using Sample = std::array<double, kDim>;

    explicit OuNoise(OuConfig cfg = {}) : cfg_(cfg) { reset(); }

    void reset();
    const Sample& step(std::mt19937_64& rng);
    const Sample& state() const { return state_; }
    const OuConfig& config() const { return cfg_; }

    // Text form of the process and its Gaussian source, for resumable runs.
    std::string serialize() const;
    void deserialize(const std::string& text);

private:
    OuConfig cfg_;
    Sample state_{};
    std::normal_distribution<double> normal_{0.0, 1.0};
};

/// Linear decay from 1 to `final_scale` over `decay_steps`, then held.
double noise_decay(long long step, long long decay_steps, double final_scale);

}  // namespace muckload::rl
