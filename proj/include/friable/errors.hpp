#pragma once

#include <stdexcept>
#include <string>

namespace friable {

// Bad parameter values, inverted windows, malformed inputs.  CLI maps to exit 2.
struct argument_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Query outside the range a table or window is authoritative for.  CLI maps to exit 2.
struct range_error : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Resource limits: memory budgets, enumeration budgets, overflow.  CLI maps to exit 3.
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace friable
