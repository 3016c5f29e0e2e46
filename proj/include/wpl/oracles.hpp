#pragma once

#include "wpl/packet.hpp"

namespace wpl {

/// Closed-form free evolution of a Gaussian packet under the quadratic
/// dispersion, for validating the numerical propagators.
struct GaussianEvolution {
    GaussianParams params;
    PhysicalConstants constants;
};

// Psi(x,t) = pi^(-1/4) (a + i hbar t / m0 a)^(-1/2)
//            * exp[i p_x x / hbar - i p_x^2 t / 2 m0 hbar]
//            * exp[-(x - x0 - p_x t/m0)^2 (1 - i hbar t / m0 a^2)
//                  / 2(a^2 + hbar^2 t^2 / m0^2 a^2)]
//
// on the principal square-root branch (continuous through t = 0). The
// prefactor assumes the unit-norm amplitude; explicit amplitudes scale the
// whole expression linearly.
cplx gaussian_evolved(const GaussianEvolution& ge, double x, double t);

// |Psi(x,t)|^2 in closed form: the Gaussian stays Gaussian with variance
// growing as (a^2 + hbar^2 t^2 / m0^2 a^2) / 2 while the centroid drifts at
// p_x / m0.
double gaussian_density(const GaussianEvolution& ge, double x, double t);

// 1D free-particle kernel (m0 / 2 pi i hbar t)^(1/2) exp(i m0 x^2 / 2 hbar t).
// Principal branch: the prefactor carries exp(-i pi/4) for t > 0 and the
// conjugate phase for t < 0, matching the t -> 0 delta limit. Throws at t = 0.
cplx green_function_1d(double x, double t, const PhysicalConstants& pc);

// exp[i (omega' v^2 / 2c^2 - omega') t] Psi0(x - v t) with omega' the rest
// frequency. The shift is applied spectrally (multiply by exp(-i k v t)), so
// arbitrary non-grid translations are exact for band-limited input. This is
// the reference solution the Doppler dispersion must reproduce.
WavePacket rigid_translation(const WavePacket& w0, double v, double t);

}  // namespace wpl
