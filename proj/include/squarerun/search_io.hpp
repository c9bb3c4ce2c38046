#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "squarerun/serialize.hpp"
#include "squarerun/surface.hpp"

namespace squarerun {

inline constexpr const char* kVersion = "0.1.0";

// Everything needed to reproduce a search run: the exact config plus
// coverage markers.  Result lines are a pure function of command + config,
// so a manifest certifies what a results file contains.
struct RunManifest {
  std::string command;
  Json config;
  std::string version = kVersion;
  unsigned shards = 1;
  unsigned long long candidates = 0;
  unsigned long long hits_new = 0;
  std::string started;
  std::string finished;
};

std::string utc_timestamp();

// SQUARERUN_RESULTS_DIR, falling back to ./results.
std::filesystem::path default_results_dir();

Json to_json(const SearchConfig& cfg);
SearchConfig search_config_from_json(const Json& j);

Json to_json(const RunManifest& m);
RunManifest manifest_from_json(const Json& j);

// Appends one compact JSON line per hit, skipping lines already present
// byte for byte; returns the number of lines actually written.  Creates
// parent directories as needed.
std::size_t append_hits(const std::filesystem::path& file,
                        const std::vector<FourSquareHit>& hits);

void write_manifest(const std::filesystem::path& file, const RunManifest& m);
RunManifest read_manifest(const std::filesystem::path& file);

// All hits currently in a results file, in file order.
std::vector<FourSquareHit> read_hits(const std::filesystem::path& file);

}  // namespace squarerun
