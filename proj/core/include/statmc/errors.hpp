#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace statmc {

/// Base for all runtime simulation failures (as opposed to bad arguments,
/// which are reported with std::invalid_argument / std::domain_error).
class SimulationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Integration produced a non-finite state.
class DivergenceError : public SimulationError {
public:
    DivergenceError(const std::string& what, double t)
        : SimulationError(what), time_(t) {}
    double time() const { return time_; }

private:
    double time_;
};

/// A field evaluation got too close to a point source.
class SingularityError : public SimulationError {
public:
    using SimulationError::SimulationError;
};

/// A trajectory did not leave the integration region within the step budget.
class NonEscapeError : public SimulationError {
public:
    NonEscapeError(const std::string& what, double x, double y, std::size_t steps)
        : SimulationError(what), x_(x), y_(y), steps_(steps) {}
    double last_x() const { return x_; }
    double last_y() const { return y_; }
    std::size_t steps() const { return steps_; }

private:
    double x_;
    double y_;
    std::size_t steps_;
};

/// A retry loop exceeded its attempt cap.
class RunawayError : public SimulationError {
public:
    using SimulationError::SimulationError;
};

}  // namespace statmc
