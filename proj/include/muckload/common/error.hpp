#pragma once

#include <stdexcept>
#include <string>

namespace muckload {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid or inconsistent configuration values.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Pile geometry that cannot host the requested zones or wedge.
class GeometryError : public Error {
public:
    using Error::Error;
};

/// Joint angles outside the arm's reachable range.
class KinematicsError : public Error {
public:
    using Error::Error;
};

/// Non-finite or otherwise broken simulation inputs.
class SimulationFault : public Error {
public:
    using Error::Error;
};

/// Calls made in the wrong episode phase (e.g. step after terminal).
class LifecycleError : public Error {
public:
    using Error::Error;
};

/// Tensor shape mismatches in the learning code.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// Malformed or unreadable files.
class FormatError : public Error {
public:
    using Error::Error;
};

/// Non-finite losses or parameters during training.
class DivergenceError : public Error {
public:
    using Error::Error;
};

void require_config(bool condition, const std::string& message);

}  // namespace muckload
