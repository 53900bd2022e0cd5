#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lrp/geometry.hpp"
#include "lrp/params.hpp"
#include "lrp/rng.hpp"

namespace lrp {

// Shortest decimal string that round-trips a double at 17 significant digits.
// All numeric output files use this formatting.
std::string fmt17(double v);

std::string vec_json(const Vec& v);

// Flat key=value config text. '#' starts a comment; blank lines ignored.
using Config = std::map<std::string, std::string>;
Config parse_config_text(const std::string& text);
Config load_config_file(const std::string& path);
std::string config_to_text(const Config& cfg);

// FNV-1a over the sorted "key=value\n" serialization; stable run identity.
uint64_t config_hash(const Config& cfg);
std::string hash_hex(uint64_t h);

ModelParams params_from_config(const Config& cfg);
Config params_to_config(const ModelParams& p);
uint64_t master_seed_from_config(const Config& cfg);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

struct RunManifest {
  std::string run_id;
  std::string subcommand;
  Config resolved_config;
  uint64_t master_seed = 0;
  std::string artifact_version;
  std::vector<std::string> outputs;
  long long wall_ms = -1;  // omitted when repro mode is on
  long long edges_sampled = -1;
  std::vector<std::pair<std::string, std::string>> extra;
};

std::string manifest_to_json(const RunManifest& m);
RunManifest manifest_from_json(const std::string& text);

}  // namespace lrp
