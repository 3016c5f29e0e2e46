#include "wpl/oracles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wpl/propagator.hpp"

namespace wpl {

namespace {

void check_point(double x, double t) {
    if (!std::isfinite(x) || !std::isfinite(t))
        throw std::invalid_argument("evaluation point must be finite");
}

double check_width(const GaussianParams& p) {
    if (!(p.a > 0.0)) throw std::invalid_argument("gaussian width parameter must be positive");
    return p.a;
}

}  // namespace

cplx gaussian_evolved(const GaussianEvolution& ge, double x, double t) {
    check_point(x, t);
    const PhysicalConstants& pc = ge.constants;
    const GaussianParams& p = ge.params;
    const double a = check_width(p);

    const double tau = pc.hbar * t / (pc.m0 * a * a);  // dimensionless spreading time
    const double ht_ma = pc.hbar * t / (pc.m0 * a);
    const double spread = a * a + ht_ma * ht_ma;  // a^2 + hbar^2 t^2 / m0^2 a^2
    const double xi = x - p.x0 - p.p_x * t / pc.m0;

    const cplx prefactor =
        std::pow(std::numbers::pi, -0.25) / std::sqrt(cplx(a, ht_ma));
    const cplx carrier = std::polar(
        1.0, p.p_x * x / pc.hbar - p.p_x * p.p_x * t / (2.0 * pc.m0 * pc.hbar));
    const cplx envelope = std::exp(-xi * xi * cplx(1.0, -tau) / (2.0 * spread));

    const double amp_scale =
        p.normalize ? 1.0 : p.amplitude * std::pow(std::numbers::pi * a * a, 0.25);
    return amp_scale * prefactor * carrier * envelope;
}

double gaussian_density(const GaussianEvolution& ge, double x, double t) {
    check_point(x, t);
    const PhysicalConstants& pc = ge.constants;
    const GaussianParams& p = ge.params;
    const double a = check_width(p);

    const double ht_ma = pc.hbar * t / (pc.m0 * a);
    const double spread = a * a + ht_ma * ht_ma;
    const double xi = x - p.x0 - p.p_x * t / pc.m0;
    const double scale =
        p.normalize ? 1.0
                    : p.amplitude * p.amplitude * std::sqrt(std::numbers::pi) * a;
    return scale * std::exp(-xi * xi / spread) / std::sqrt(std::numbers::pi * spread);
}

cplx green_function_1d(double x, double t, const PhysicalConstants& pc) {
    validate(pc);
    check_point(x, t);
    if (t == 0.0) throw std::domain_error("free-particle kernel is a delta at t = 0");
    const double mag = std::sqrt(pc.m0 / (2.0 * std::numbers::pi * pc.hbar * std::abs(t)));
    const double branch = t > 0.0 ? -std::numbers::pi / 4.0 : std::numbers::pi / 4.0;
    return mag * std::polar(1.0, branch + pc.m0 * x * x / (2.0 * pc.hbar * t));
}

WavePacket rigid_translation(const WavePacket& w0, double v, double t) {
    const PhysicalConstants& pc = w0.constants;
    if (!std::isfinite(v) || !(std::abs(v) < pc.c))
        throw std::invalid_argument("translation velocity requires |v| < c");
    if (!std::isfinite(t)) throw std::invalid_argument("translation time must be finite");

    SpectralAmplitude s = to_spectral(w0);
    for (std::size_t m = 0; m < s.samples.size(); ++m)
        s.samples[m] *= std::polar(1.0, -s.grid.k(m) * v * t);
    WavePacket shifted = from_spectral(s);

    const double omega_prime = rest_frequency(pc);
    const cplx phase =
        std::polar(1.0, (0.5 * omega_prime * v * v / (pc.c * pc.c) - omega_prime) * t);
    for (cplx& z : shifted.samples) z *= phase;
    return shifted;
}

}  // namespace wpl
