#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wpl/constants.hpp"
#include "wpl/dispersion.hpp"
#include "wpl/packet.hpp"
#include "wpl/propagator.hpp"

namespace wpl {

struct GridSpec {
    std::size_t n = 1024;
    double x_min = -40.0;
    double x_max = 40.0;

    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

// Declarative description of one batch run. The on-disk format is a JSON
// object (schema documented in the README); parse/serialize round-trips
// losslessly, and the canonical serialization feeds the config hash recorded
// in output manifests.
struct RunConfig {
    GridSpec grid;
    PhysicalConstants constants;
    GaussianParams initial;
    DispersionRelation dispersion = Quadratic{};
    std::vector<double> times;
    Method method = Method::Spectral;
    std::string output_prefix = "out/run";

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

std::string method_name(Method m);
Method method_from_name(const std::string& name);

/// JSON fragment describing a dispersion relation, e.g. {"type":"doppler","v":1.0}.
std::string dispersion_to_json_text(const DispersionRelation& d);

/// Canonical JSON text, keys sorted, trailing newline.
std::string serialize_config(const RunConfig& cfg);

/// Parses and validates; throws std::invalid_argument on malformed or
/// semantically invalid input.
RunConfig parse_config(const std::string& text);

/// Reads the file (IoError when unreadable) and parses it.
RunConfig load_config_file(const std::string& path);

/// 64-bit FNV-1a of the canonical serialization, as 16 hex digits.
std::string config_hash(const RunConfig& cfg);

}  // namespace wpl
