#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace plunet {

// Operand dimensions do not line up (matmul, solve, forward, ...).
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Invalid run, model, or optimizer configuration.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Linear solve hit a pivot too small to trust.
class SingularityError : public std::runtime_error {
public:
    SingularityError(std::size_t pivot_index, double pivot_value)
        : std::runtime_error("matrix is singular: pivot " + std::to_string(pivot_index) +
                             " has magnitude " + std::to_string(pivot_value)),
          pivot_index_(pivot_index) {}

    std::size_t pivot_index() const { return pivot_index_; }

private:
    std::size_t pivot_index_;
};

// Asked for the inverse of an activation that has none (ReLU).
class NotInvertibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Inverse evaluated outside its domain (atanh beyond (-1, 1)).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// File could not be opened, written, or parsed.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace plunet
