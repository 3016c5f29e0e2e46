#pragma once

#include <functional>
#include <string>

namespace wpl {

// Numerical-hygiene diagnostics (packet containment, kernel aliasing) are
// warnings, not errors: stress-testing wraparound on purpose is a supported
// use. The handler is process-wide; the default writes to stderr.
using WarningHandler = std::function<void(const std::string&)>;

/// Installs a new handler and returns the previous one.
WarningHandler set_warning_handler(WarningHandler handler);

void warn(const std::string& message);

}  // namespace wpl
