#include "wpl/run_config.hpp"

#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "wpl/io_error.hpp"

namespace wpl {

namespace {

using nlohmann::json;

json dispersion_to_json(const DispersionRelation& d) {
    if (std::holds_alternative<Quadratic>(d)) return json{{"type", "quadratic"}};
    return json{{"type", "doppler"}, {"v", std::get<Doppler>(d).v}};
}

DispersionRelation dispersion_from_json(const json& j) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "quadratic") return Quadratic{};
    if (type == "doppler") return Doppler{j.at("v").get<double>()};
    throw std::invalid_argument("unknown dispersion type '" + type + "'");
}

json config_to_json(const RunConfig& cfg) {
    return json{
        {"grid", {{"n", cfg.grid.n}, {"x_min", cfg.grid.x_min}, {"x_max", cfg.grid.x_max}}},
        {"constants", {{"hbar", cfg.constants.hbar}, {"m0", cfg.constants.m0}, {"c", cfg.constants.c}}},
        {"initial",
         {{"x0", cfg.initial.x0},
          {"a", cfg.initial.a},
          {"p_x", cfg.initial.p_x},
          {"normalize", cfg.initial.normalize},
          {"amplitude", cfg.initial.amplitude}}},
        {"dispersion", dispersion_to_json(cfg.dispersion)},
        {"times", cfg.times},
        {"method", method_name(cfg.method)},
        {"output_prefix", cfg.output_prefix}};
}

void validate_config(const RunConfig& cfg) {
    if (!is_power_of_two(cfg.grid.n) || cfg.grid.n < 8)
        throw std::invalid_argument("config: grid.n must be a power of two >= 8");
    if (!(cfg.grid.x_max > cfg.grid.x_min))
        throw std::invalid_argument("config: grid interval is degenerate");
    validate(cfg.constants);
    if (!(cfg.initial.a > 0.0)) throw std::invalid_argument("config: initial.a must be positive");
    validate(cfg.dispersion, cfg.constants);
    for (std::size_t i = 1; i < cfg.times.size(); ++i)
        if (!(cfg.times[i] > cfg.times[i - 1]))
            throw std::invalid_argument("config: times must be strictly increasing");
    if (cfg.method == Method::Convolution &&
        !std::holds_alternative<Quadratic>(cfg.dispersion))
        throw std::invalid_argument(
            "config: the convolution method requires the quadratic dispersion");
    if (cfg.output_prefix.empty())
        throw std::invalid_argument("config: output_prefix must be non-empty");
}

}  // namespace

std::string method_name(Method m) {
    return m == Method::Spectral ? "spectral" : "convolution";
}

std::string dispersion_to_json_text(const DispersionRelation& d) {
    return dispersion_to_json(d).dump();
}

Method method_from_name(const std::string& name) {
    if (name == "spectral") return Method::Spectral;
    if (name == "convolution") return Method::Convolution;
    throw std::invalid_argument("unknown method '" + name + "'");
}

std::string serialize_config(const RunConfig& cfg) {
    return config_to_json(cfg).dump(2) + "\n";
}

RunConfig parse_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("config parse error: ") + e.what());
    }

    RunConfig cfg;
    try {
        static const char* known[] = {"grid",  "constants", "initial",      "dispersion",
                                      "times", "method",    "output_prefix"};
        for (const auto& [key, _] : j.items()) {
            bool ok = false;
            for (const char* k : known) ok = ok || key == k;
            if (!ok) throw std::invalid_argument("config: unknown key '" + key + "'");
        }

        const json& grid = j.at("grid");
        cfg.grid.n = grid.at("n").get<std::size_t>();
        cfg.grid.x_min = grid.at("x_min").get<double>();
        cfg.grid.x_max = grid.at("x_max").get<double>();

        const json& consts = j.at("constants");
        cfg.constants.hbar = consts.at("hbar").get<double>();
        cfg.constants.m0 = consts.at("m0").get<double>();
        cfg.constants.c = consts.at("c").get<double>();

        const json& init = j.at("initial");
        cfg.initial.x0 = init.at("x0").get<double>();
        cfg.initial.a = init.at("a").get<double>();
        cfg.initial.p_x = init.at("p_x").get<double>();
        cfg.initial.normalize = init.value("normalize", true);
        cfg.initial.amplitude = init.value("amplitude", 1.0);

        cfg.dispersion = dispersion_from_json(j.at("dispersion"));
        cfg.times = j.at("times").get<std::vector<double>>();
        cfg.method = method_from_name(j.at("method").get<std::string>());
        cfg.output_prefix = j.at("output_prefix").get<std::string>();
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("config field error: ") + e.what());
    }

    validate_config(cfg);
    return cfg;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("read failure on config file '" + path + "'");
    return parse_config(buf.str());
}

std::string config_hash(const RunConfig& cfg) {
    // FNV-1a, 64-bit: stable across platforms and runs, unlike std::hash.
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char byte : serialize_config(cfg)) {
        h ^= byte;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace wpl
