#pragma once

#include <stdexcept>
#include <string>

namespace fracbound {

/// Argument outside the documented domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A mathematical precondition (e.g. convexity admission) was not met.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Adaptive quadrature ran out of subdivisions. Carries the best estimate.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double best, double err)
        : std::runtime_error(what), best_estimate(best), error_estimate(err) {}

    double best_estimate;
    double error_estimate;
};

/// The integrand produced a non-finite value.
class EvaluationError : public std::runtime_error {
public:
    EvaluationError(const std::string& what, double where)
        : std::runtime_error(what), abscissa(where) {}

    double abscissa;
};

}  // namespace fracbound
