#include "wpl/warnings.hpp"

#include <iostream>
#include <mutex>
#include <utility>

namespace wpl {

namespace {

std::mutex handler_mutex;

WarningHandler& handler_ref() {
    static WarningHandler handler = [](const std::string& msg) {
        std::cerr << "warning: " << msg << '\n';
    };
    return handler;
}

}  // namespace

WarningHandler set_warning_handler(WarningHandler handler) {
    std::lock_guard lock(handler_mutex);
    std::swap(handler_ref(), handler);
    return handler;
}

void warn(const std::string& message) {
    WarningHandler snapshot;
    {
        std::lock_guard lock(handler_mutex);
        snapshot = handler_ref();
    }
    if (snapshot) snapshot(message);
}

}  // namespace wpl
