#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "muckload/harness/trial.hpp"

namespace muckload::harness {

struct SessionOptions {
    std::string host = "127.0.0.1";
    unsigned short port = 8765;  // 0 picks a free port
    std::chrono::milliseconds tick{100};
    env::Mode mode = env::Mode::rlc_train;
    double slope = 30.0;  // deg
    Material material = Material::homogeneous;
    double error = 0.0;  // deg
    std::uint64_t seed = 1;  // episode k uses trial_seed(seed, slope, k)
    /// Step only after a command has arrived since the previous frame.
    /// Replay clients use it to stay in step with the server.
    bool lockstep = false;
    std::optional<std::filesystem::path> out_dir;  // logs/ and trials.csv
};

/// Live teleoperation session over WebSocket. One client at a time drives one
/// environment; every environment access happens on the server's tick loop.
///
/// Client frames: {"type":"cmd","wheels":f,"boom":f,"bucket":f} with values
/// in [-1, 1], and {"type":"reset"} (optional "seed") to begin an episode.
/// Server frames: {"type":"state",...} after a reset and on every tick of a
/// running episode; {"type":"error","message":s} for rejected input.
/// The latest command is held until replaced. A client that disconnects
/// mid-episode leaves an aborted, invalid trial.
class SessionServer {
public:
    SessionServer(ConfigSource cfg, SessionOptions opts);
    ~SessionServer();
    SessionServer(const SessionServer&) = delete;
    SessionServer& operator=(const SessionServer&) = delete;

    /// Bound port; resolved at construction.
    unsigned short port() const;

    /// Serves until stop() is called.
    void run();

    /// Safe to call from any thread.
    void stop();

    /// Completed and aborted trials so far.
    std::vector<TrialRecord> trials() const;

    /// Tick start times of the current connection, for pacing checks.
    std::vector<std::chrono::steady_clock::time_point> tick_times() const;

private:
    class Impl;
    std::unique_ptr<Impl> impl_;
};

/// State frame for the current environment state.
nlohmann::json state_frame(const env::Environment& env, double reward, int episode);

}  // namespace muckload::harness
