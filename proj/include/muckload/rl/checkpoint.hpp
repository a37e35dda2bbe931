#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>

#include "muckload/rl/ddpg.hpp"

namespace muckload::rl {

inline constexpr std::uint32_t kCheckpointVersion = 1;

/// Binary layout: "LHDC", version, policy kind, training step, then for each of
/// actor, critic, actor target, critic target the layer count, side-input slot
/// and per-layer (out, in, activation); then every weight matrix (column-major)
/// and bias in that order; then an "ADAM" section with both optimizer states.
void write_checkpoint(std::ostream& os, const Agent& agent, std::uint64_t step);
Agent read_checkpoint(std::istream& is, std::uint64_t* step = nullptr);

void save_checkpoint(const std::filesystem::path& path, const Agent& agent, std::uint64_t step);
Agent load_checkpoint(const std::filesystem::path& path, std::uint64_t* step = nullptr);

}  // namespace muckload::rl
