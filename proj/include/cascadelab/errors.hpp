#pragma once

#include <stdexcept>
#include <string>

namespace cascadelab {

// Malformed or inconsistent input data. The CLI maps this to exit code 2.
struct data_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An iterative numerical method failed to converge. Carries the last
// estimate and residual so callers can report how close it got.
// The CLI maps this to exit code 3.
struct convergence_error : std::runtime_error {
    convergence_error(const std::string& what, double estimate, double residual)
        : std::runtime_error(what), last_estimate(estimate), residual(residual) {}

    double last_estimate;
    double residual;
};

} // namespace cascadelab
