#pragma once

#include <string>

#include "schubert/weyl.hpp"

namespace schubert {

inline constexpr const char* library_version = "1.0";

// On-disk accelerator for Bruhat tables, keyed by Cartan type and library
// version. Never a source of truth: a missing, stale or malformed file
// just means recomputation.
std::string bruhat_cache_path(const RootSystem& rs, const std::string& dir);

// Install a cached table into wg if a compatible file exists.
bool load_bruhat_cache(const WeylGroup& wg, const std::string& dir);

// Write wg's table (forcing its computation) to the cache directory.
bool save_bruhat_cache(const WeylGroup& wg, const std::string& dir);

// load, else compute-and-save; any I/O failure is silent.
void attach_bruhat_cache(const WeylGroup& wg, const std::string& dir);

}  // namespace schubert
