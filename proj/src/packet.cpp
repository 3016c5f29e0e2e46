#include "wpl/packet.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "wpl/warnings.hpp"

namespace wpl {

namespace {

void check_samples(const Grid1D& grid, const std::vector<cplx>& samples, const char* what) {
    if (samples.size() != grid.size())
        throw std::invalid_argument(std::string(what) + ": sample count " +
                                    std::to_string(samples.size()) + " does not match grid size " +
                                    std::to_string(grid.size()));
    for (const cplx& z : samples)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw std::invalid_argument(std::string(what) + ": non-finite sample");
}

double weighted_norm(const std::vector<cplx>& samples, double dx) {
    double acc = 0.0;
    for (const cplx& z : samples) acc += std::norm(z);
    return std::sqrt(acc * dx);
}

}  // namespace

void validate(const WavePacket& w) {
    validate(w.constants);
    check_samples(w.grid, w.samples, "wave packet");
}

void validate(const SpectralAmplitude& s) {
    validate(s.constants);
    check_samples(s.grid, s.samples, "spectral amplitude");
}

double l2_norm(const WavePacket& w) { return weighted_norm(w.samples, w.grid.dx()); }

double l2_norm(const SpectralAmplitude& s) { return weighted_norm(s.samples, s.grid.dx()); }

WavePacket gaussian_packet(const Grid1D& grid, const GaussianParams& p,
                           const PhysicalConstants& pc) {
    validate(pc);
    if (!(p.a > 0.0) || !std::isfinite(p.a))
        throw std::invalid_argument("gaussian width parameter must be positive");
    if (!std::isfinite(p.x0) || !std::isfinite(p.p_x) || !std::isfinite(p.amplitude))
        throw std::invalid_argument("gaussian parameters must be finite");

    if (p.a < 4.0 * grid.dx())
        warn("gaussian width a = " + std::to_string(p.a) + " is under 4 dx = " +
             std::to_string(4.0 * grid.dx()) + "; packet is poorly resolved");
    if (p.x0 - grid.x_min() < 5.0 * p.a || grid.x_max() - p.x0 < 5.0 * p.a)
        warn("gaussian center x0 = " + std::to_string(p.x0) +
             " is within 5a of a domain edge; tails will wrap around");

    const double amp = p.normalize ? std::pow(std::numbers::pi * p.a * p.a, -0.25) : p.amplitude;
    std::vector<cplx> samples(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) {
        const double x = grid.x(j);
        const double d = x - p.x0;
        samples[j] = amp * std::exp(-d * d / (2.0 * p.a * p.a)) *
                     std::polar(1.0, p.p_x * x / pc.hbar);
    }
    return WavePacket{grid, std::move(samples), pc};
}

}  // namespace wpl
