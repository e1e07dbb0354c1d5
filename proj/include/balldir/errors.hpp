// Error types shared across the library.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace balldir {

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(std::string msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)),
          position(pos) {}
};

struct NonDiagonalInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Gram matrix not positive definite (zero symbol, or rank-deficient beyond
// what one refinement step can rescue). Carries the 1-norm condition estimate
// available at the point of failure, 0 if none was computed.
struct SingularGram : std::runtime_error {
    double cond_estimate;
    explicit SingularGram(std::string msg, double cond = 0.0)
        : std::runtime_error(std::move(msg)), cond_estimate(cond) {}
};

struct OutOfRange : std::domain_error {
    using std::domain_error::domain_error;
};

struct InsufficientData : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct DegenerateCloud : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace balldir
