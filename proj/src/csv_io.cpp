#include "wpl/csv_io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>

#include "wpl/io_error.hpp"
#include "wpl/run_config.hpp"

namespace wpl {

namespace {

namespace fs = std::filesystem;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::ofstream open_for_write(const fs::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    return out;
}

}  // namespace

std::vector<fs::path> emit_csv(const PropagationResult& result, const std::string& path_prefix,
                               const std::string& config_hash) {
    const fs::path prefix(path_prefix);
    try {
        if (prefix.has_parent_path()) fs::create_directories(prefix.parent_path());
    } catch (const fs::filesystem_error& e) {
        throw IoError("cannot create output directory for '" + path_prefix + "': " + e.what());
    }

    std::vector<fs::path> written;
    std::vector<std::string> snapshot_names;
    for (std::size_t i = 0; i < result.snapshots.size(); ++i) {
        char suffix[32];
        std::snprintf(suffix, sizeof suffix, "_snap%03zu.csv", i);
        const fs::path path = fs::path(path_prefix + suffix);
        std::ofstream out = open_for_write(path);
        out << "x,re,im,density\n";
        const WavePacket& snap = result.snapshots[i];
        for (std::size_t j = 0; j < snap.samples.size(); ++j) {
            const cplx z = snap.samples[j];
            out << fmt17(snap.grid.x(j)) << ',' << fmt17(z.real()) << ',' << fmt17(z.imag())
                << ',' << fmt17(std::norm(z)) << '\n';
        }
        out.close();
        if (!out) throw IoError("write failure on '" + path.string() + "'");
        written.push_back(path);
        snapshot_names.push_back(path.filename().string());
    }

    nlohmann::json manifest{
        {"config_hash", config_hash},
        {"dispersion", nlohmann::json::parse(dispersion_to_json_text(result.dispersion))},
        {"method", method_name(result.method)},
        {"snapshots", snapshot_names},
        {"times", result.times}};
    const fs::path manifest_path = fs::path(path_prefix + "_manifest.json");
    std::ofstream out = open_for_write(manifest_path);
    out << manifest.dump(2) << '\n';
    out.close();
    if (!out) throw IoError("write failure on '" + manifest_path.string() + "'");
    written.push_back(manifest_path);
    return written;
}

}  // namespace wpl
