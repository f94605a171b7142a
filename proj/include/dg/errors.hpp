#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dg {

// Invalid or mismatched tensor shapes.
struct ShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad configuration values, unknown keys, missing required keys.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dataset problems: empty class, undecodable image, unknown sample id.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Filesystem failures.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Checkpoint format violations: magic, version, truncation, checksum.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Training produced a non-finite value. Carries the iteration at which
// the divergence was detected (0 if outside a training loop).
class DivergenceError : public std::runtime_error {
public:
    DivergenceError(const std::string& what, long long iteration = 0)
        : std::runtime_error(what), iteration_(iteration) {}

    long long iteration() const { return iteration_; }

private:
    long long iteration_;
};

}  // namespace dg
