#pragma once

#include <stdexcept>
#include <string>

namespace cdt {

// Bad configuration or usage: unknown keys, out-of-range parameters,
// inconsistent shapes requested by the caller. Maps to exit code 1.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad or missing input data: malformed CSV rows, invariant violations,
// missing upstream artifacts, degenerate windows. Maps to exit code 2.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numeric failure at run time: NaN/Inf crossing a layer boundary,
// diverging training loss. Maps to exit code 3.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace cdt
