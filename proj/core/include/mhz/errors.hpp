#pragma once

#include <stdexcept>
#include <string>

namespace mhz {

// Base class for all numerical-domain failures raised by this library.
// Everything derives from std::runtime_error so callers can catch coarsely.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Argument hit (or is within guard distance of) a pole of the function.
struct pole_error : error {
    using error::error;
};

// Argument outside the mathematical domain of the operation.
struct domain_error : error {
    using error::error;
};

// Argument outside the validity window of the chosen evaluation method.
struct range_error : error {
    using error::error;
};

// Imaginary parts of the evaluation point do not share one sign.
struct sign_error : error {
    using error::error;
};

// Contour construction impossible for these parameters.
struct contour_error : error {
    using error::error;
};

// Iterative scheme failed to reach the requested tolerance within its budget.
struct convergence_error : error {
    using error::error;
};

// Predicted work for a direct summation exceeds the configured cost cap.
struct cost_error : error {
    using error::error;
};

// Number of variables outside the supported range.
struct arity_error : error {
    using error::error;
};

// Enumeration budget (shift count, factorization range, ...) exceeded.
struct budget_error : error {
    using error::error;
};

// Mutually inconsistent construction parameters.
struct compatibility_error : error {
    using error::error;
};

// A value that must lie on the unit circle does not.
struct unimodular_error : error {
    using error::error;
};

// Malformed textual input (polynomial grammar, config files).
struct parse_error : error {
    using error::error;
};

}  // namespace mhz
