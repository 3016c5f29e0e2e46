#pragma once

#include <stdexcept>
#include <string>

namespace wpl {

/// File-system failure carrying the offending path in its message; the CLI
/// maps it to its own exit code, distinct from validation errors.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace wpl
