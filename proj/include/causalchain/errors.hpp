#pragma once

#include <stdexcept>
#include <string>

namespace causalchain {

/// Bad argument / broken invariant on input data.
struct validation_error : std::invalid_argument {
    explicit validation_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Request exceeds the dense register cap.
struct capacity_error : std::runtime_error {
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical routine failed to converge or produced invalid results.
struct numerical_error : std::runtime_error {
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace causalchain
