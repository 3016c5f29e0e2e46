#pragma once

#include <vector>

#include "wpl/dispersion.hpp"
#include "wpl/packet.hpp"

namespace wpl {

enum class Method { Spectral, Convolution };

struct PropagationResult {
    std::vector<double> times;        // strictly increasing
    std::vector<WavePacket> snapshots;  // one per time
    Method method = Method::Spectral;
    DispersionRelation dispersion = Quadratic{};
};

// Unitary transform pair:
//
//   Phi_m = n^{-1/2} sum_j Psi_j exp(-i k_m x_j)
//   Psi_j = n^{-1/2} sum_m Phi_m exp(+i k_m x_j)
//
// Phases are referenced to absolute x rather than bin index, so a linear
// phase in k is exactly a translation in x. Parseval holds with dx weights on
// both sides; physical observables carry the dx weight explicitly and are
// independent of this bin convention. Boundary conditions are periodic by
// construction.
SpectralAmplitude to_spectral(const WavePacket& w);
WavePacket from_spectral(const SpectralAmplitude& s);

// One exact step under exp(-i omega(k) t): norm preserving, reversible, valid
// for negative t. No sub-stepping is ever needed for free evolution.
WavePacket propagate_spectral(const WavePacket& w, const DispersionRelation& d, double t);

// Direct quadrature sum_j G(x_i - x_j, t) Psi_j dx against the closed-form
// quadratic-dispersion kernel. O(n^2); kept as an independent cross-check of
// propagate_spectral, not as the production path. Throws for t = 0 (the
// kernel degenerates to a delta) and warns outside the aliasing validity
// window (see convolution_phase_increment).
WavePacket propagate_convolution(const WavePacket& w, double t);

// Kernel phase advance per sample at the domain edge, m0 R dx / (hbar |t|)
// with R the domain half-width. The quadrature is trusted while this stays
// below pi; smaller |t| oscillates faster and eventually aliases.
double convolution_phase_increment(const Grid1D& grid, double t, const PhysicalConstants& pc);

// One snapshot per requested time, each computed as a single exact step from
// t = 0 (never chained), so error does not accumulate across the schedule.
PropagationResult propagate_schedule(const WavePacket& w, const DispersionRelation& d,
                                     const std::vector<double>& times, Method method);

}  // namespace wpl
