#pragma once

#include <stdexcept>
#include <string>

namespace cauchy {

/// Base for every error raised by the solver library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller-supplied argument violates an operation precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Operand sizes do not agree.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// Observability matrix condition number exceeds the configured cap.
class ObservabilityDeficient : public Error {
public:
    ObservabilityDeficient(const std::string& what, double condition)
        : Error(what), condition_(condition) {}
    double condition() const noexcept { return condition_; }

private:
    double condition_;
};

/// Closed-loop eigenvalues miss the requested poles after placement.
class PlacementFailed : public Error {
public:
    PlacementFailed(const std::string& what, double deviation)
        : Error(what), deviation_(deviation) {}
    double deviation() const noexcept { return deviation_; }

private:
    double deviation_;
};

/// Dense eigensolve did not converge.
class EigensolveFailed : public Error {
public:
    using Error::Error;
};

/// Marching produced a non-finite or runaway state.
class NonFiniteState : public Error {
public:
    NonFiniteState(const std::string& what, int sweep, std::size_t node)
        : Error(what), sweep_(sweep), node_(node) {}
    int sweep() const noexcept { return sweep_; }
    std::size_t node() const noexcept { return node_; }

private:
    int sweep_;
    std::size_t node_;
};

}  // namespace cauchy
