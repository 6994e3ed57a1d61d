#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyp/precision.hpp"

namespace hyp::lab {

struct ExperimentConfig {
  std::string command;
  std::string surface = "bolza";
  std::vector<double> L;  // empty: per-command default
  double eps = 0.2;
  std::array<double, 2> window{0, 0};
  bool window_set = false;
  std::array<double, 3> r{1, 1, 1};
  std::uint64_t seed = 1;
  Precision precision = Precision::Extended;
  std::string out;
  std::string format;  // csv or json, empty: per-command default
  bool selftest = false;

  int draws = 1000;
  int threads = 0;  // 0: OpenMP default
  bool parallel = true;
  double cap = 14;
  // sweep
  double a = 1.2, b = 0.3, c = -0.4, M = 1;
  // pants / clothesline
  int gamma = 0, from = 0, to = 0, n_max = 3;
  // equi
  double sigma_length = 1, a1 = -5, a2 = 5, T = 1, step = 0.05;
  int samples = 16384, spatial = 8, angular = 8;
};

// throws std::invalid_argument for unknown keys or malformed values
void apply_setting(ExperimentConfig& cfg, const std::string& key, const std::string& value);
// key=value lines, '#' comments
void load_config(ExperimentConfig& cfg, const std::string& path);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  nlohmann::json summary = nlohmann::json::object();
  Table table;
  int exit_code = 0;  // 0 pass, 1 assertion failure
};

std::string num(double v);  // 17 significant digits
std::string to_csv(const Table& t);
nlohmann::json to_json(const Report& r);
std::string render(const Report& r, const std::string& format);

Report cmd_hexcheck(const ExperimentConfig& cfg);
Report cmd_sweep(const ExperimentConfig& cfg);
Report cmd_census(const ExperimentConfig& cfg);
Report cmd_pants(const ExperimentConfig& cfg);
Report cmd_clothesline(const ExperimentConfig& cfg);
Report cmd_equi(const ExperimentConfig& cfg);
Report run(const ExperimentConfig& cfg);
std::string default_format(const std::string& command);

// FNV-1a over a string, hex
std::string digest(const std::string& s);

}  // namespace hyp::lab
