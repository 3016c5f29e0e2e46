#include "wpl/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "wpl/dirac.hpp"
#include "wpl/dispersion.hpp"
#include "wpl/kinematics.hpp"
#include "wpl/observables.hpp"
#include "wpl/oracles.hpp"
#include "wpl/propagator.hpp"

namespace wpl {

namespace {

// Reference setup shared by all criteria.
const PhysicalConstants kConsts{1.0, 1.0, 10.0};
const GaussianParams kInitial{0.0, 1.0, 1.0, true, 1.0};
constexpr double kFrameVelocity = 1.0;

Grid1D reference_grid() { return make_grid(1024, -40.0, 40.0); }

WavePacket reference_packet() {
    return gaussian_packet(reference_grid(), kInitial, kConsts);
}

double rel_err(double got, double expected) {
    return std::abs(got - expected) / std::abs(expected);
}

// Least-squares slope of y against x.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

CheckResult spreading_law() {
    CheckResult r{"1 gaussian-spreading-law", false, 0.0, 1e-5,
                  "width^2 of spectral evolution vs (a^2 + hbar^2 t^2/m0^2 a^2)/2 at t=0,1,2,5"};
    const WavePacket w0 = reference_packet();
    const double a = kInitial.a;
    for (double t : {0.0, 1.0, 2.0, 5.0}) {
        const WavePacket wt = propagate_spectral(w0, Quadratic{}, t);
        const double ht_ma = kConsts.hbar * t / (kConsts.m0 * a);
        const double expected = (a * a + ht_ma * ht_ma) / 2.0;
        r.observed = std::max(r.observed, rel_err(observables(wt).var_x, expected));
    }
    r.passed = r.observed < r.bound;
    return r;
}

CheckResult closed_form_agreement() {
    CheckResult r{"2 closed-form-agreement", false, 0.0, 1e-8,
                  "L2 relative error, spectral evolution vs evolved-Gaussian closed form at t=2"};
    const WavePacket w0 = reference_packet();
    const double t = 2.0;
    const WavePacket wt = propagate_spectral(w0, Quadratic{}, t);
    const GaussianEvolution ge{kInitial, kConsts};
    WavePacket exact = wt;
    for (std::size_t j = 0; j < exact.samples.size(); ++j)
        exact.samples[j] = gaussian_evolved(ge, exact.grid.x(j), t);
    r.observed = compare(wt, exact).l2_relative_error;
    r.passed = r.observed < r.bound;
    return r;
}

CheckResult convolution_cross_check() {
    CheckResult r{"3 convolution-cross-check", false, 0.0, 1e-3,
                  "L2 relative error, convolution quadrature vs spectral evolution at t=1"};
    const WavePacket w0 = reference_packet();
    const double t = 1.0;
    const double dphi = convolution_phase_increment(w0.grid, t, kConsts);
    if (dphi > std::numbers::pi) {
        r.detail += " [outside validity window]";
        r.observed = dphi;
        return r;  // window violated: fail loudly rather than trust the quadrature
    }
    r.observed =
        compare(propagate_convolution(w0, t), propagate_spectral(w0, Quadratic{}, t))
            .l2_relative_error;
    r.passed = r.observed < r.bound;
    return r;
}

CheckResult rigid_translation_check() {
    CheckResult r{"4 doppler-rigid-translation", false, 0.0, 1e-10,
                  "spectral Doppler vs rigid translation (max abs) and density shift "
                  "invariance at t=0.5,1,3.7"};
    const WavePacket w0 = reference_packet();
    const double v = kFrameVelocity;
    const double amp = std::pow(std::numbers::pi * kInitial.a * kInitial.a, -0.25);
    for (double t : {0.5, 1.0, 3.7}) {
        const WavePacket numeric = propagate_spectral(w0, Doppler{v}, t);
        const WavePacket reference = rigid_translation(w0, v, t);
        r.observed = std::max(r.observed, compare(numeric, reference).max_abs_error);

        // Density must equal the initial density translated by v t; evaluate
        // the shifted closed form directly, independently of any transform.
        for (std::size_t j = 0; j < numeric.samples.size(); ++j) {
            const double x = numeric.grid.x(j) - v * t - kInitial.x0;
            const double expected =
                amp * amp * std::exp(-x * x / (kInitial.a * kInitial.a));
            r.observed =
                std::max(r.observed, std::abs(std::norm(numeric.samples[j]) - expected));
        }
    }
    r.passed = r.observed < r.bound;
    return r;
}

CheckResult unitarity_and_group() {
    CheckResult r{"5 unitarity-and-group-property", false, 0.0, 1e-11,
                  "norm drift (<1e-12) and two-step vs one-step composition (<1e-11)"};
    const WavePacket w0 = reference_packet();
    const double norm0 = l2_norm(w0);
    bool ok = true;
    const std::vector<DispersionRelation> catalog{Quadratic{}, Doppler{kFrameVelocity}};
    for (const auto& d : catalog) {
        for (double t : {1.0, 3.7}) {
            const double drift = rel_err(l2_norm(propagate_spectral(w0, d, t)), norm0);
            ok = ok && drift < 1e-12;
            r.observed = std::max(r.observed, drift);
        }
        const WavePacket two_step =
            propagate_spectral(propagate_spectral(w0, d, 1.0), d, 1.5);
        const WavePacket one_step = propagate_spectral(w0, d, 2.5);
        const double comp = compare(two_step, one_step).max_abs_error;
        ok = ok && comp < 1e-11;
        r.observed = std::max(r.observed, comp);
    }
    r.passed = ok;
    return r;
}

CheckResult dirac_identities() {
    CheckResult r{"6 dirac-identities", false, 0.0, 1e-10,
                  "relative residuals of <c alpha>=c^2 p/E, <beta>=1/gamma, and the energy "
                  "identity over 100 random momenta"};
    std::mt19937 rng(20240811);
    std::uniform_real_distribution<double> mag(0.0, 10.0 * kConsts.m0 * kConsts.c);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_int_distribution<int> hel(0, 1);
    for (int i = 0; i < 100; ++i) {
        Vec3 dir(unit(rng), unit(rng), unit(rng));
        if (dir.norm() < 1e-6) dir = Vec3(0, 0, 1);
        dir.normalize();
        const Vec3 p = std::max(mag(rng), 1e-6) * dir;
        const DiracState u = make_dirac_state(p, hel(rng) ? +1 : -1, kConsts);
        const double energy = u.energy();

        const Vec3 v_exact = kConsts.c * kConsts.c * p / energy;
        r.observed = std::max(r.observed, (expect_alpha(u) - v_exact).norm() / v_exact.norm());

        const double beta_exact = kConsts.m0 * kConsts.c * kConsts.c / energy;
        r.observed = std::max(r.observed, rel_err(expect_beta(u), beta_exact));

        r.observed = std::max(r.observed, rel_err(dirac_energy_identity(u), energy));
    }
    r.passed = r.observed < r.bound;
    return r;
}

CheckResult kinematics_consistency() {
    CheckResult r{"7 kinematics-consistency", false, 0.0, 1e-12,
                  "boost round trips (<1e-12), quartic error scaling of the expansion "
                  "(slope 4 +- 0.1), and hbar*omega(Doppler) == expansion exactly"};
    bool ok = true;

    // Round trips: boost into the lab frame and back.
    std::mt19937 rng(19690720);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_real_distribution<double> speed(0.0, 0.99 * kConsts.c);
    std::uniform_real_distribution<double> mom(0.0, 10.0 * kConsts.m0 * kConsts.c);
    const double mc2 = kConsts.m0 * kConsts.c * kConsts.c;
    for (int i = 0; i < 1000; ++i) {
        Vec3 vdir(unit(rng), unit(rng), unit(rng));
        if (vdir.norm() < 1e-6) vdir = Vec3(1, 0, 0);
        vdir.normalize();
        const FrameBoost boost(speed(rng) * vdir, kConsts.c);

        Vec3 pdir(unit(rng), unit(rng), unit(rng));
        if (pdir.norm() < 1e-6) pdir = Vec3(0, 1, 0);
        pdir.normalize();
        const Vec3 p_prime = mom(rng) * pdir;
        const FourMomentum m_prime{
            std::sqrt(p_prime.squaredNorm() * kConsts.c * kConsts.c + mc2 * mc2), p_prime};

        const FourMomentum back =
            boost_four_momentum(boost.inverse(), boost_four_momentum(boost, m_prime));
        const double scale = p_prime.norm() + m_prime.E / kConsts.c;
        r.observed = std::max(r.observed, std::abs(back.E - m_prime.E) / m_prime.E);
        r.observed = std::max(r.observed, (back.p - p_prime).norm() / scale);
    }
    ok = ok && r.observed < 1e-12;

    // The expansion misses the exact rest-frame boost at O(v^4/c^4): the
    // log-log error slope over beta in [1e-3, 1e-1] must be 4.
    std::vector<double> log_beta, log_err;
    for (int i = 0; i <= 12; ++i) {
        const double beta = std::pow(10.0, -3.0 + i / 6.0);
        const Vec3 v(beta * kConsts.c, 0.0, 0.0);
        const FrameBoost boost(v, kConsts.c);
        const Vec3 p_lab = boost.gamma() * kConsts.m0 * v;
        const double exact = boost_energy(boost, mc2, p_lab);
        const double approx = nonrel_energy(v, p_lab, kConsts);
        log_beta.push_back(std::log(beta));
        log_err.push_back(std::log(std::abs(approx - exact) / exact));
    }
    const double slope = fit_slope(log_beta, log_err);
    ok = ok && std::abs(slope - 4.0) <= 0.1;

    // Dispersion relation vs energy expansion: identical arithmetic at hbar=1.
    std::uniform_real_distribution<double> vels(-0.99 * kConsts.c, 0.99 * kConsts.c);
    std::uniform_real_distribution<double> moms(-10.0, 10.0);
    double max_diff = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double v = vels(rng);
        const double p = moms(rng);
        const double lhs = kConsts.hbar * omega(Doppler{v}, p / kConsts.hbar, kConsts);
        max_diff = std::max(max_diff, std::abs(lhs - nonrel_energy(v, p, kConsts)));
    }
    ok = ok && max_diff == 0.0;

    std::ostringstream extra;
    extra << r.detail << "; slope=" << slope << ", dispersion-vs-expansion max diff=" << max_diff;
    r.detail = extra.str();
    r.passed = ok;
    return r;
}

}  // namespace

std::vector<CheckResult> run_acceptance_checks() {
    return {spreading_law(),       closed_form_agreement(), convolution_cross_check(),
            rigid_translation_check(), unitarity_and_group(),   dirac_identities(),
            kinematics_consistency()};
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.passed; });
}

void print_check_results(std::ostream& os, const std::vector<CheckResult>& results) {
    for (const CheckResult& r : results) {
        os << (r.passed ? "PASS" : "FAIL") << "  " << r.name << "  observed " << r.observed
           << " (bound " << r.bound << ")  -- " << r.detail << '\n';
    }
}

}  // namespace wpl
