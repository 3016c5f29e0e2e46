// Batch CLI for the wave-packet laboratory: declarative propagation runs with
// CSV output, propagator cross-comparisons, Dirac/kinematics identity tables,
// and the selftest battery.
//
// Exit codes: 0 success, 1 validation failure, 2 invariant/selftest failure,
// 3 I/O failure.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <random>

#include "wpl/csv_io.hpp"
#include "wpl/dirac.hpp"
#include "wpl/io_error.hpp"
#include "wpl/kinematics.hpp"
#include "wpl/observables.hpp"
#include "wpl/oracles.hpp"
#include "wpl/propagator.hpp"
#include "wpl/run_config.hpp"
#include "wpl/selftest.hpp"

namespace {

namespace fs = std::filesystem;

// WPLAB_OUT, when set, redirects output into that directory: the configured
// prefix keeps only its file-name part.
std::string effective_prefix(const std::string& configured) {
    if (const char* dir = std::getenv("WPLAB_OUT"); dir && *dir)
        return (fs::path(dir) / fs::path(configured).filename()).string();
    return configured;
}

wpl::WavePacket build_initial(const wpl::RunConfig& cfg) {
    const wpl::Grid1D grid = wpl::make_grid(cfg.grid.n, cfg.grid.x_min, cfg.grid.x_max);
    return wpl::gaussian_packet(grid, cfg.initial, cfg.constants);
}

int run_propagate(const std::string& config_path) {
    const wpl::RunConfig cfg = wpl::load_config_file(config_path);
    const wpl::WavePacket w0 = build_initial(cfg);
    const wpl::PropagationResult result =
        wpl::propagate_schedule(w0, cfg.dispersion, cfg.times, cfg.method);
    const auto files =
        wpl::emit_csv(result, effective_prefix(cfg.output_prefix), wpl::config_hash(cfg));
    for (const auto& f : files) std::cout << f.string() << '\n';
    return 0;
}

void print_comparison(double t, const wpl::Comparison& cmp) {
    std::cout << "t=" << t << "  l2_rel=" << cmp.l2_relative_error
              << "  max_abs=" << cmp.max_abs_error
              << "  phase_aligned_l2=" << cmp.global_phase_aligned_l2 << '\n';
}

int run_compare(const std::string& config_path) {
    const wpl::RunConfig cfg = wpl::load_config_file(config_path);
    const wpl::WavePacket w0 = build_initial(cfg);

    if (const auto* dop = std::get_if<wpl::Doppler>(&cfg.dispersion)) {
        std::cout << "# spectral Doppler evolution vs rigid translation (v=" << dop->v << ")\n";
        for (double t : cfg.times)
            print_comparison(t, wpl::compare(wpl::propagate_spectral(w0, cfg.dispersion, t),
                                             wpl::rigid_translation(w0, dop->v, t)));
        return 0;
    }

    std::cout << "# spectral vs convolution evolution (quadratic dispersion)\n";
    for (double t : cfg.times) {
        if (t == 0.0) {
            std::cout << "t=0 skipped (convolution kernel is a delta)\n";
            continue;
        }
        print_comparison(t, wpl::compare(wpl::propagate_spectral(w0, wpl::Quadratic{}, t),
                                         wpl::propagate_convolution(w0, t)));
    }
    return 0;
}

int run_dirac_check(double pmax, int samples, unsigned seed, const wpl::PhysicalConstants& pc) {
    if (pmax <= 0.0) pmax = 10.0 * pc.m0 * pc.c;
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> mag(0.0, pmax);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);

    double worst_alpha = 0.0, worst_beta = 0.0, worst_energy = 0.0, worst_helicity = 0.0;
    for (int i = 0; i < samples; ++i) {
        wpl::Vec3 dir(unit(rng), unit(rng), unit(rng));
        if (dir.norm() < 1e-6) dir = wpl::Vec3(0, 0, 1);
        dir.normalize();
        const wpl::Vec3 p = std::max(mag(rng), 1e-6 * pmax) * dir;

        const wpl::DiracState up = wpl::make_dirac_state(p, +1, pc);
        const wpl::DiracState dn = wpl::make_dirac_state(p, -1, pc);
        const double energy = up.energy();
        const wpl::Vec3 v_exact = pc.c * pc.c * p / energy;

        worst_alpha = std::max(worst_alpha,
                               (wpl::expect_alpha(up) - v_exact).norm() / v_exact.norm());
        worst_beta = std::max(worst_beta, std::abs(wpl::expect_beta(up) - pc.m0 * pc.c * pc.c /
                                                                              energy) *
                                              energy / (pc.m0 * pc.c * pc.c));
        worst_energy =
            std::max(worst_energy, std::abs(wpl::dirac_energy_identity(up) - energy) / energy);
        worst_helicity = std::max(
            worst_helicity, (wpl::expect_alpha(up) - wpl::expect_alpha(dn)).norm() / pc.c);
    }

    const double bound = 1e-10;
    std::cout << "identity                     max residual   bound\n";
    std::cout << "<c alpha> = c^2 p / E        " << worst_alpha << "   " << bound << '\n';
    std::cout << "<beta> = 1/gamma             " << worst_beta << "   " << bound << '\n';
    std::cout << "E = <c alpha>.p + <beta>mc^2 " << worst_energy << "   " << bound << '\n';
    std::cout << "helicity independence        " << worst_helicity << "   " << bound << '\n';
    const bool ok = worst_alpha < bound && worst_beta < bound && worst_energy < bound &&
                    worst_helicity < bound;
    std::cout << (ok ? "all identities hold" : "IDENTITY VIOLATION") << '\n';
    return ok ? 0 : 2;
}

int run_kinematics(const std::vector<double>& speeds, const wpl::PhysicalConstants& pc) {
    const double mc2 = pc.m0 * pc.c * pc.c;
    std::cout << "v         gamma       p=gamma*m0*v  E=v.p+mc^2/gamma  gamma*m0*c^2  "
                 "E_nonrel      |nonrel-exact|/exact\n";
    for (double v : speeds) {
        const wpl::FrameBoost boost(wpl::Vec3(v, 0, 0), pc.c);
        const double gamma = boost.gamma();
        const wpl::Vec3 p_lab = wpl::boost_momentum(boost, wpl::FourMomentum{mc2, wpl::Vec3::Zero()});
        const double e_boost = wpl::boost_energy(boost, mc2, p_lab);
        const double e_exact = gamma * mc2;
        const double e_nonrel = wpl::nonrel_energy(wpl::Vec3(v, 0, 0), p_lab, pc);
        std::printf("%-9g %-11.9g %-13.9g %-17.11g %-13.11g %-13.11g %-g\n", v, gamma,
                    p_lab.x(), e_boost, e_exact, e_nonrel,
                    std::abs(e_nonrel - e_exact) / e_exact);
    }
    return 0;
}

int run_selftest() {
    const auto results = wpl::run_acceptance_checks();
    wpl::print_check_results(std::cout, results);
    return wpl::all_passed(results) ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Free-particle quantum wave-packet laboratory"};
    app.require_subcommand(1);

    std::string config_path;
    auto* propagate =
        app.add_subcommand("propagate", "Run a configured schedule and emit CSV snapshots");
    propagate->add_option("config", config_path, "JSON run configuration")->required();

    auto* cmp = app.add_subcommand(
        "compare", "Compare propagation routes (spectral vs convolution, or Doppler vs "
                   "rigid translation) on a configured run");
    cmp->add_option("config", config_path, "JSON run configuration")->required();

    double pmax = 0.0;
    int samples = 100;
    unsigned seed = 12345;
    wpl::PhysicalConstants consts;
    auto* dirac = app.add_subcommand("dirac-check",
                                     "Verify plane-wave expectation-value identities");
    dirac->add_option("--pmax", pmax, "momentum magnitude cap (default 10*m0*c)");
    dirac->add_option("--samples", samples, "number of random momenta")
        ->check(CLI::PositiveNumber);
    dirac->add_option("--seed", seed, "random seed");

    std::vector<double> speeds{0.5, 1.0, 2.0, 3.0};
    auto* kin = app.add_subcommand("kinematics",
                                   "Print frame-boost energy/momentum tables");
    kin->add_option("--v", speeds, "frame speeds along x");

    for (auto* sub : {dirac, kin}) {
        sub->add_option("--hbar", consts.hbar, "action constant");
        sub->add_option("--m0", consts.m0, "rest mass");
        sub->add_option("--c", consts.c, "speed of light");
    }

    auto* selftest =
        app.add_subcommand("selftest", "Run the full invariant battery; exit 0 only if green");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*propagate) return run_propagate(config_path);
        if (*cmp) return run_compare(config_path);
        if (*dirac) return run_dirac_check(pmax, samples, seed, consts);
        if (*kin) return run_kinematics(speeds, consts);
        if (*selftest) return run_selftest();
    } catch (const wpl::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
    return 1;
}
