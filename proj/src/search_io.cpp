#include "squarerun/search_io.hpp"

#include <cstdlib>
#include <ctime>
#include <fstream>
#include <unordered_set>

#include "squarerun/errors.hpp"

namespace squarerun {

namespace {

std::vector<std::string> read_lines(const std::filesystem::path& file) {
  std::vector<std::string> lines;
  std::ifstream in(file);
  if (!in) return lines;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) lines.push_back(line);
  return lines;
}

}  // namespace

std::string utc_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::filesystem::path default_results_dir() {
  if (const char* dir = std::getenv("SQUARERUN_RESULTS_DIR"); dir && *dir)
    return std::filesystem::path(dir);
  return std::filesystem::path("results");
}

Json to_json(const SearchConfig& cfg) {
  Json j;
  Json grid = Json::array();
  for (const Rational& y : cfg.y_grid) grid.push_back(to_json(y));
  j["y_grid"] = std::move(grid);
  j["box"] = cfg.box;
  j["coprime_only"] = cfg.coprime_only;
  j["include_trivial"] = cfg.include_trivial;
  j["shards"] = cfg.shards;
  return j;
}

SearchConfig search_config_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("search config must be an object");
  SearchConfig cfg;
  for (const Json& y : j.at("y_grid")) cfg.y_grid.push_back(rational_from_json(y));
  cfg.box = j.at("box").get<long>();
  cfg.coprime_only = j.at("coprime_only").get<bool>();
  cfg.include_trivial = j.at("include_trivial").get<bool>();
  cfg.shards = j.at("shards").get<unsigned>();
  return cfg;
}

Json to_json(const RunManifest& m) {
  Json j;
  j["command"] = m.command;
  j["config"] = m.config;
  j["version"] = m.version;
  j["shards"] = m.shards;
  j["candidates"] = m.candidates;
  j["hits_new"] = m.hits_new;
  j["started"] = m.started;
  j["finished"] = m.finished;
  return j;
}

RunManifest manifest_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("manifest must be an object");
  RunManifest m;
  m.command = j.at("command").get<std::string>();
  m.config = j.at("config");
  m.version = j.at("version").get<std::string>();
  m.shards = j.at("shards").get<unsigned>();
  m.candidates = j.at("candidates").get<unsigned long long>();
  m.hits_new = j.at("hits_new").get<unsigned long long>();
  m.started = j.at("started").get<std::string>();
  m.finished = j.at("finished").get<std::string>();
  return m;
}

std::size_t append_hits(const std::filesystem::path& file,
                        const std::vector<FourSquareHit>& hits) {
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  std::unordered_set<std::string> seen;
  for (std::string& line : read_lines(file)) seen.insert(std::move(line));
  std::ofstream out(file, std::ios::app);
  if (!out) throw Error("cannot open results file " + file.string());
  std::size_t written = 0;
  for (const FourSquareHit& hit : hits) {
    std::string line = to_json(hit).dump();
    if (seen.insert(line).second) {
      out << line << '\n';
      ++written;
    }
  }
  return written;
}

void write_manifest(const std::filesystem::path& file, const RunManifest& m) {
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  std::ofstream out(file);
  if (!out) throw Error("cannot open manifest file " + file.string());
  out << to_json(m).dump(2) << '\n';
}

RunManifest read_manifest(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error("cannot open manifest file " + file.string());
  Json j = Json::parse(in, nullptr, true);
  return manifest_from_json(j);
}

std::vector<FourSquareHit> read_hits(const std::filesystem::path& file) {
  std::vector<FourSquareHit> hits;
  for (const std::string& line : read_lines(file))
    hits.push_back(hit_from_json(Json::parse(line)));
  return hits;
}

}  // namespace squarerun
