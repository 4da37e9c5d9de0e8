#pragma once

#include <stdexcept>

namespace sendov {

// Malformed or out-of-range input: bad configs, coincident roots, degree caps.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A theorem/lemma precondition does not hold for the given input.
struct HypothesisError : std::domain_error {
    using std::domain_error::domain_error;
};

// An iterative method failed to reach its tolerance.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A threshold scan exhausted its range without finding a stable hit.
struct NotLocatedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace sendov
