#pragma once

#include <stdexcept>

namespace starlike {

// Bad value or contract violation on the caller's side (maps to exit code 2).
struct InvalidArgument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Parameters outside the range for which a result is proven (exit code 3).
struct HypothesisViolation : std::domain_error {
    using std::domain_error::domain_error;
};

// Internal numerical failure: non-convergence, cross-check mismatch (exit 4 territory).
struct NumericFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace starlike
