#pragma once

#include <stdexcept>
#include <string>

namespace riesz {

/// Thrown when an iterative evaluation fails to meet its tolerance within the
/// configured budget. Carries the best estimate reached so far.
class convergence_error : public std::runtime_error {
public:
    convergence_error(const std::string& what, double best_estimate)
        : std::runtime_error(what), best_estimate_(best_estimate) {}

    double best_estimate() const noexcept { return best_estimate_; }

private:
    double best_estimate_;
};

/// Thrown when a computation is requested in a regime where the working
/// precision cannot represent the result (e.g. a normalising constant
/// underflows).
class conditioning_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace riesz
