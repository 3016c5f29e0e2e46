#pragma once

#include "wpl/packet.hpp"

namespace wpl {

struct PacketObservables {
    double norm = 0.0;          // sum |psi_j|^2 dx
    double mean_x = 0.0;        // first moment of the density
    double var_x = 0.0;         // second central moment
    double width = 0.0;         // sqrt(var_x)
    double peak_x = 0.0;        // location of the density maximum
    double peak_density = 0.0;  // |psi|^2 at the maximum
};

// Density moments with dx weights. On this periodic grid the plain weighted
// sum coincides with the trapezoid rule, since the duplicate wrap sample is
// omitted. Throws for zero-norm packets (moments are undefined).
PacketObservables observables(const WavePacket& w);

struct Comparison {
    double l2_relative_error = 0.0;
    double max_abs_error = 0.0;
    // L2 error after removing the best single global phase from the second
    // argument; a pure phase difference is physically unobservable in |psi|^2,
    // so phase content and observable content are scored separately.
    double global_phase_aligned_l2 = 0.0;
};

// All L2 quantities carry dx weights and are normalized by the larger of the
// two packet norms, which keeps every field symmetric under argument swap.
// Requires identical grids.
Comparison compare(const WavePacket& w1, const WavePacket& w2);

}  // namespace wpl
