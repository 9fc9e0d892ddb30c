#pragma once

#include <stdexcept>

namespace bpucoh {

/* Raised for invalid user-facing input: bad primes, out-of-range
 * parameters, malformed monomial expressions. Maps to CLI exit code 2. */
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Raised when an internal mathematical invariant fails (a symmetry the
 * computation relies on, a chain law, a term budget). Maps to CLI exit
 * code 1; seeing one of these means a bug, not bad input. */
struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace bpucoh
