#include "wpl/propagator.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "wpl/oracles.hpp"
#include "wpl/warnings.hpp"

namespace wpl {

namespace {

// FFTW planning is not thread safe; execution is. Plans are created per call
// with FFTW_ESTIMATE (cheap at these sizes), so transforms stay pure functions
// with no shared scratch state.
std::mutex fftw_plan_mutex;

std::vector<cplx> dft(const std::vector<cplx>& in, int sign) {
    std::vector<cplx> out(in.size());
    fftw_plan plan;
    {
        std::lock_guard lock(fftw_plan_mutex);
        plan = fftw_plan_dft_1d(
            static_cast<int>(in.size()),
            reinterpret_cast<fftw_complex*>(const_cast<cplx*>(in.data())),
            reinterpret_cast<fftw_complex*>(out.data()), sign,
            FFTW_ESTIMATE | FFTW_PRESERVE_INPUT);
    }
    fftw_execute(plan);
    {
        std::lock_guard lock(fftw_plan_mutex);
        fftw_destroy_plan(plan);
    }
    return out;
}

}  // namespace

SpectralAmplitude to_spectral(const WavePacket& w) {
    validate(w);
    std::vector<cplx> out = dft(w.samples, FFTW_FORWARD);
    const double scale = 1.0 / std::sqrt(static_cast<double>(w.grid.size()));
    for (std::size_t m = 0; m < out.size(); ++m)
        out[m] *= scale * std::polar(1.0, -w.grid.k(m) * w.grid.x_min());
    return SpectralAmplitude{w.grid, std::move(out), w.constants};
}

WavePacket from_spectral(const SpectralAmplitude& s) {
    validate(s);
    std::vector<cplx> shifted(s.samples.size());
    for (std::size_t m = 0; m < shifted.size(); ++m)
        shifted[m] = s.samples[m] * std::polar(1.0, s.grid.k(m) * s.grid.x_min());
    std::vector<cplx> out = dft(shifted, FFTW_BACKWARD);
    const double scale = 1.0 / std::sqrt(static_cast<double>(s.grid.size()));
    for (cplx& z : out) z *= scale;
    return WavePacket{s.grid, std::move(out), s.constants};
}

WavePacket propagate_spectral(const WavePacket& w, const DispersionRelation& d, double t) {
    if (!std::isfinite(t)) throw std::invalid_argument("propagation time must be finite");
    SpectralAmplitude s = to_spectral(w);
    for (std::size_t m = 0; m < s.samples.size(); ++m)
        s.samples[m] *= std::polar(1.0, -omega(d, s.grid.k(m), w.constants) * t);
    return from_spectral(s);
}

double convolution_phase_increment(const Grid1D& grid, double t, const PhysicalConstants& pc) {
    const double half_width = 0.5 * grid.length();
    return pc.m0 * half_width * grid.dx() / (pc.hbar * std::abs(t));
}

WavePacket propagate_convolution(const WavePacket& w, double t) {
    validate(w);
    if (t == 0.0)
        throw std::domain_error(
            "convolution propagation is undefined at t = 0: the kernel degenerates to a delta");
    if (!std::isfinite(t)) throw std::invalid_argument("propagation time must be finite");

    const PhysicalConstants& pc = w.constants;
    const Grid1D& grid = w.grid;
    if (const double dphi = convolution_phase_increment(grid, t, pc); dphi > std::numbers::pi) {
        std::ostringstream msg;
        msg << "convolution kernel aliases at t = " << t << ": phase step per sample " << dphi
            << " exceeds pi at the domain edge; result is flagged untrusted";
        warn(msg.str());
    }

    // G(x,t) = G(0,t) exp(i m0 x^2 / 2 hbar t); hoist the prefactor and sweep
    // the quadratic phase directly.
    const cplx g0 = green_function_1d(0.0, t, pc);
    const double phase_coef = pc.m0 / (2.0 * pc.hbar * t);
    const std::size_t n = grid.size();
    std::vector<cplx> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double xi = grid.x(i);
        cplx acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double d = xi - grid.x(j);
            acc += std::polar(1.0, phase_coef * d * d) * w.samples[j];
        }
        out[i] = g0 * acc * grid.dx();
    }
    return WavePacket{grid, std::move(out), pc};
}

PropagationResult propagate_schedule(const WavePacket& w, const DispersionRelation& d,
                                     const std::vector<double>& times, Method method) {
    validate(d, w.constants);
    for (std::size_t i = 1; i < times.size(); ++i)
        if (!(times[i] > times[i - 1]))
            throw std::invalid_argument("schedule times must be strictly increasing");
    if (method == Method::Convolution && !std::holds_alternative<Quadratic>(d))
        throw std::invalid_argument(
            "convolution propagation is defined for the quadratic dispersion only");

    PropagationResult result{times, {}, method, d};
    result.snapshots.reserve(times.size());
    for (double t : times)
        result.snapshots.push_back(method == Method::Spectral ? propagate_spectral(w, d, t)
                                                              : propagate_convolution(w, t));
    return result;
}

}  // namespace wpl
