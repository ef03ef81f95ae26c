#ifndef RRG_ERRORS_HPP
#define RRG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rrg {

// Invalid (k, a), family, truncation or other argument outside a documented domain.
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A configuration handed to an operation is not in the set the operation acts on.
struct MembershipError : std::domain_error {
    using std::domain_error::domain_error;
};

// An internal invariant of a construction failed. Raised instead of repairing
// the state, so that defects surface in exhaustive testing.
struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

// Exact integer arithmetic left the range of the coefficient type.
struct OverflowError : std::overflow_error {
    using std::overflow_error::overflow_error;
};

} // namespace rrg

#endif
