#pragma once

#include <cmath>
#include <stdexcept>

namespace wpl {

// Natural-unit defaults: hbar = m0 = 1 with c = 10, so |v|/c << 1 regimes are
// reachable while the rest-energy phase m0 c^2 t / hbar stays well within
// double precision. All three are overridable per run.
struct PhysicalConstants {
    double hbar = 1.0;
    double m0 = 1.0;
    double c = 10.0;

    friend bool operator==(const PhysicalConstants&, const PhysicalConstants&) = default;
};

inline void validate(const PhysicalConstants& pc) {
    if (!std::isfinite(pc.hbar) || !std::isfinite(pc.m0) || !std::isfinite(pc.c))
        throw std::invalid_argument("physical constants must be finite");
    if (!(pc.hbar > 0.0) || !(pc.m0 > 0.0) || !(pc.c > 0.0))
        throw std::invalid_argument("physical constants must be positive");
}

/// Rest energy expressed as an angular frequency, m0 c^2 / hbar.
inline double rest_frequency(const PhysicalConstants& pc) {
    return pc.m0 * pc.c * pc.c / pc.hbar;
}

}  // namespace wpl
