#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <vector>

#include "muckload/rl/mlp.hpp"

namespace muckload::rl {

struct Transition {
    Vector obs;
    Vector action;
    double reward = 0.0;
    Vector next_obs;
    bool done = false;
};

/// Column-major batch: one transition per column.
struct Batch {
    Matrix obs;
    Matrix action;
    Vector reward;
    Matrix next_obs;
    Vector done;
    std::vector<std::size_t> indices;
};

class ReplayBuffer {
public:
    ReplayBuffer(std::size_t capacity, int obs_dim, int action_dim);

    void add(const Transition& t);
    std::size_t size() const { return size_; }
    std::size_t capacity() const { return capacity_; }
    std::size_t cursor() const { return cursor_; }
    int obs_dim() const { return static_cast<int>(obs_.rows()); }
    int action_dim() const { return static_cast<int>(action_.rows()); }

    /// Uniform sample of `n` distinct stored transitions.
    Batch sample(std::size_t n, std::mt19937_64& rng) const;
    Transition at(std::size_t index) const;

    void write(std::ostream& os) const;
    static ReplayBuffer read(std::istream& is);

    bool operator==(const ReplayBuffer&) const = default;

private:
    std::size_t capacity_;
    std::size_t size_ = 0;
    std::size_t cursor_ = 0;
    Matrix obs_;
    Matrix action_;
    Vector reward_;
    Matrix next_obs_;
    Vector done_;
};

/// Floyd's algorithm: `n` distinct indices from [0, range), in draw order.
std::vector<std::size_t> sample_distinct(std::size_t range, std::size_t n, std::mt19937_64& rng);

}  // namespace muckload::rl
