#include "lrp/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace lrp {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string vec_json(const Vec& v) {
  std::string s = "[";
  for (int i = 0; i < v.d; ++i) {
    if (i) s += ",";
    s += fmt17(v.x[i]);
  }
  s += "]";
  return s;
}

Config parse_config_text(const std::string& text) {
  Config cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": expected key=value");
    auto trim = [](std::string s) {
      auto a = s.find_first_not_of(" \t");
      auto b = s.find_last_not_of(" \t");
      if (a == std::string::npos) return std::string();
      return s.substr(a, b - a + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (key.empty()) throw std::invalid_argument("config: empty key");
    cfg[key] = val;
  }
  return cfg;
}

Config load_config_file(const std::string& path) {
  return parse_config_text(read_file(path));
}

std::string config_to_text(const Config& cfg) {
  std::string out;
  for (const auto& [k, v] : cfg) out += k + " = " + v + "\n";
  return out;
}

uint64_t config_hash(const Config& cfg) {
  uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
  };
  for (const auto& [k, v] : cfg) {
    feed(k);
    feed("=");
    feed(v);
    feed("\n");
  }
  return h;
}

std::string hash_hex(uint64_t h) {
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ModelParams params_from_config(const Config& cfg) {
  ModelParams p;
  auto get = [&](const char* key) -> const std::string* {
    auto it = cfg.find(key);
    return it == cfg.end() ? nullptr : &it->second;
  };
  if (auto v = get("d")) p.d = std::stoi(*v);
  if (auto v = get("s")) p.s = std::stod(*v);
  if (auto v = get("beta")) p.beta = std::stod(*v);
  if (auto v = get("eta")) p.eta = std::stod(*v);
  if (auto v = get("norm")) p.norm = norm_from_name(*v);
  validate_params(p);
  return p;
}

Config params_to_config(const ModelParams& p) {
  Config cfg;
  cfg["d"] = std::to_string(p.d);
  cfg["s"] = fmt17(p.s);
  cfg["beta"] = fmt17(p.beta);
  cfg["eta"] = fmt17(p.eta);
  cfg["norm"] = norm_name(p.norm);
  return cfg;
}

uint64_t master_seed_from_config(const Config& cfg) {
  auto it = cfg.find("master_seed");
  if (it == cfg.end()) return 1;
  return std::stoull(it->second);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string manifest_to_json(const RunManifest& m) {
  nlohmann::json j;
  j["run_id"] = m.run_id;
  j["subcommand"] = m.subcommand;
  nlohmann::json cfg = nlohmann::json::object();
  for (const auto& [k, v] : m.resolved_config) cfg[k] = v;
  j["config"] = cfg;
  j["master_seed"] = m.master_seed;
  j["artifact_version"] = m.artifact_version;
  j["outputs"] = m.outputs;
  if (m.wall_ms >= 0) j["wall_ms"] = m.wall_ms;
  if (m.edges_sampled >= 0) j["edges_sampled"] = m.edges_sampled;
  nlohmann::json extra = nlohmann::json::object();
  for (const auto& [k, v] : m.extra) extra[k] = v;
  j["extra"] = extra;
  return j.dump(2) + "\n";
}

RunManifest manifest_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  RunManifest m;
  m.run_id = j.at("run_id").get<std::string>();
  m.subcommand = j.at("subcommand").get<std::string>();
  for (auto it = j.at("config").begin(); it != j.at("config").end(); ++it)
    m.resolved_config[it.key()] = it.value().get<std::string>();
  m.master_seed = j.at("master_seed").get<uint64_t>();
  m.artifact_version = j.at("artifact_version").get<std::string>();
  for (const auto& o : j.at("outputs")) m.outputs.push_back(o.get<std::string>());
  if (j.contains("wall_ms")) m.wall_ms = j["wall_ms"].get<long long>();
  if (j.contains("edges_sampled")) m.edges_sampled = j["edges_sampled"].get<long long>();
  if (j.contains("extra"))
    for (auto it = j["extra"].begin(); it != j["extra"].end(); ++it)
      m.extra.emplace_back(it.key(), it.value().get<std::string>());
  return m;
}

}  // namespace lrp
