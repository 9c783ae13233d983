#pragma once
// Exception taxonomy shared by all glat headers.

#include <stdexcept>
#include <string>

namespace glat {

// Invalid graph structure (bad indices, self-loops, unknown classes).
struct StructuralError : std::runtime_error {
    explicit StructuralError(const std::string& msg) : std::runtime_error(msg) {}
};

// Tensor shape contract violations.
struct ShapeError : std::runtime_error {
    explicit ShapeError(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad configuration values (world configs, model configs, checkpoints).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// File / stream problems, including malformed corpus lines.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Training diverged (NaN/inf loss).
struct TrainingDiverged : std::runtime_error {
    explicit TrainingDiverged(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised by the ceiling oracles when a world cannot be enumerated exactly.
struct NonEnumerableWorld : std::runtime_error {
    explicit NonEnumerableWorld(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace glat
