#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "wpl/propagator.hpp"

namespace wpl {

// Writes one CSV per snapshot (columns x,re,im,density, 17 significant
// digits) named <prefix>_snap<idx>.csv, plus <prefix>_manifest.json recording
// times, method, dispersion, config hash and the snapshot file names. Output
// is byte-deterministic for identical inputs. Returns the paths written,
// manifest last; throws IoError with the offending path on failure.
std::vector<std::filesystem::path> emit_csv(const PropagationResult& result,
                                            const std::string& path_prefix,
                                            const std::string& config_hash);

}  // namespace wpl
