#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "wpl/packet.hpp"
#include "wpl/warnings.hpp"

namespace wpl::test {

inline double max_abs_diff(const WavePacket& a, const WavePacket& b) {
    double worst = 0.0;
    for (std::size_t j = 0; j < a.samples.size(); ++j)
        worst = std::max(worst, std::abs(a.samples[j] - b.samples[j]));
    return worst;
}

/// Captures warnings for the lifetime of the object, restoring the previous
/// handler on destruction.
class WarningCapture {
public:
    WarningCapture() {
        previous_ = set_warning_handler(
            [this](const std::string& msg) { messages_.push_back(msg); });
    }
    ~WarningCapture() { set_warning_handler(previous_); }

    const std::vector<std::string>& messages() const { return messages_; }

private:
    std::vector<std::string> messages_;
    WarningHandler previous_;
};

}  // namespace wpl::test
