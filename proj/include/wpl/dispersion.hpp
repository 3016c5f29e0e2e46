#pragma once

#include <cmath>
#include <stdexcept>
#include <variant>

#include "wpl/constants.hpp"

namespace wpl {

// Dispersion-relation catalog. Quadratic is the textbook free-particle law
// omega(k) = hbar k^2 / 2 m0, whose curvature spreads packets. Doppler is the
// frame-corrected law
//
//   omega(k) = v k - (omega'/2)(v^2/c^2) + omega',   omega' = m0 c^2 / hbar,
//
// linear in k, so every mode travels at the same group velocity v and packets
// translate rigidly. v is the frame velocity, an independent input; it is not
// derived from the packet's carrier momentum.
struct Quadratic {
    friend bool operator==(const Quadratic&, const Quadratic&) = default;
};

struct Doppler {
    double v = 0.0;
    friend bool operator==(const Doppler&, const Doppler&) = default;
};

using DispersionRelation = std::variant<Quadratic, Doppler>;

namespace detail {

// Free-particle energy seen from a frame moving at v, to lowest order in v/c:
// E(p) = v p - m0 v^2 / 2 + m0 c^2. The Doppler omega is this divided by hbar
// at p = hbar k, and nonrel_energy() forwards here, so the dispersion relation
// and the energy expansion stay bit-identical at hbar = 1.
inline double frame_shifted_energy(double v, double p, const PhysicalConstants& pc) {
    return v * p - 0.5 * pc.m0 * v * v + pc.m0 * pc.c * pc.c;
}

}  // namespace detail

inline void validate(const DispersionRelation& d, const PhysicalConstants& pc) {
    if (const auto* dop = std::get_if<Doppler>(&d)) {
        if (!std::isfinite(dop->v) || !(std::abs(dop->v) < pc.c))
            throw std::invalid_argument("Doppler dispersion requires |v| < c");
    }
}

inline double omega(const DispersionRelation& d, double k, const PhysicalConstants& pc) {
    validate(d, pc);
    if (std::holds_alternative<Quadratic>(d)) return pc.hbar * k * k / (2.0 * pc.m0);
    return detail::frame_shifted_energy(std::get<Doppler>(d).v, pc.hbar * k, pc) / pc.hbar;
}

/// d omega / d k: hbar k / m0 for Quadratic, the constant v for Doppler.
inline double group_velocity(const DispersionRelation& d, double k, const PhysicalConstants& pc) {
    validate(d, pc);
    if (std::holds_alternative<Quadratic>(d)) return pc.hbar * k / pc.m0;
    return std::get<Doppler>(d).v;
}

}  // namespace wpl
