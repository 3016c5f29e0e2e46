#pragma once

#include <complex>
#include <vector>

#include "wpl/constants.hpp"
#include "wpl/grid.hpp"

namespace wpl {

using cplx = std::complex<double>;

/// Complex field samples Psi(x_j) on a Grid1D. Immutable by convention: every
/// operation returns a fresh packet.
struct WavePacket {
    Grid1D grid;
    std::vector<cplx> samples;
    PhysicalConstants constants;
};

/// Transform-domain samples Phi(k_j) on the conjugate grid.
struct SpectralAmplitude {
    Grid1D grid;
    std::vector<cplx> samples;
    PhysicalConstants constants;
};

struct GaussianParams {
    double x0 = 0.0;         // center
    double a = 1.0;          // width parameter
    double p_x = 0.0;        // carrier momentum
    bool normalize = true;   // pick A = (pi a^2)^(-1/4) for unit L2 norm
    double amplitude = 1.0;  // explicit A, used when normalize is false

    friend bool operator==(const GaussianParams&, const GaussianParams&) = default;
};

void validate(const WavePacket& w);
void validate(const SpectralAmplitude& s);

/// Discrete L2 norm with dx weights, sqrt(sum_j |psi_j|^2 dx).
double l2_norm(const WavePacket& w);
double l2_norm(const SpectralAmplitude& s);

// Samples A exp(-(x - x0)^2 / 2 a^2) exp(i p_x x / hbar) on the grid. Warns
// (does not fail) when the packet is poorly contained: a < 4 dx or either edge
// closer than 5 a to x0.
WavePacket gaussian_packet(const Grid1D& grid, const GaussianParams& p,
                           const PhysicalConstants& pc);

}  // namespace wpl
