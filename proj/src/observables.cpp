#include "wpl/observables.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wpl {

PacketObservables observables(const WavePacket& w) {
    validate(w);
    const double dx = w.grid.dx();
    const std::size_t n = w.grid.size();

    PacketObservables obs;
    double first = 0.0;
    std::size_t peak_j = 0;
    for (std::size_t j = 0; j < n; ++j) {
        const double dens = std::norm(w.samples[j]);
        obs.norm += dens * dx;
        first += w.grid.x(j) * dens * dx;
        if (dens > obs.peak_density) {
            obs.peak_density = dens;
            peak_j = j;
        }
    }
    if (!(obs.norm > 0.0)) throw std::invalid_argument("observables of a zero-norm packet");

    obs.mean_x = first / obs.norm;
    for (std::size_t j = 0; j < n; ++j) {
        const double d = w.grid.x(j) - obs.mean_x;
        obs.var_x += d * d * std::norm(w.samples[j]) * dx;
    }
    obs.var_x /= obs.norm;
    obs.width = std::sqrt(obs.var_x);
    obs.peak_x = w.grid.x(peak_j);
    return obs;
}

Comparison compare(const WavePacket& w1, const WavePacket& w2) {
    validate(w1);
    validate(w2);
    if (!(w1.grid == w2.grid))
        throw std::invalid_argument("compared packets must share the same grid");

    const double dx = w1.grid.dx();
    const double denom = std::max(l2_norm(w1), l2_norm(w2));
    if (!(denom > 0.0)) throw std::invalid_argument("comparison of zero-norm packets");

    Comparison cmp;
    double diff2 = 0.0;
    cplx inner = 0.0;  // <w2, w1> with dx weight
    for (std::size_t j = 0; j < w1.samples.size(); ++j) {
        const cplx d = w1.samples[j] - w2.samples[j];
        diff2 += std::norm(d) * dx;
        cmp.max_abs_error = std::max(cmp.max_abs_error, std::abs(d));
        inner += std::conj(w2.samples[j]) * w1.samples[j] * dx;
    }
    cmp.l2_relative_error = std::sqrt(diff2) / denom;

    // Best alignment multiplies w2 by the unit phase of <w2, w1>.
    const double mag = std::abs(inner);
    const cplx phase = mag > 0.0 ? inner / mag : cplx(1.0, 0.0);
    double aligned2 = 0.0;
    for (std::size_t j = 0; j < w1.samples.size(); ++j)
        aligned2 += std::norm(w1.samples[j] - phase * w2.samples[j]) * dx;
    cmp.global_phase_aligned_l2 = std::sqrt(aligned2) / denom;
    return cmp;
}

}  // namespace wpl
