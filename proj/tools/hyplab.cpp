#include <fstream>
#include <iostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "hyp/errors.hpp"
#include "hyp/lab.hpp"

int main(int argc, char** argv) {
  using hyp::lab::apply_setting;
  CLI::App app{"hyperbolic surface experiments"};
  app.require_subcommand(1, 1);

  std::string config, surface, L, eps, window, r, seed, precision, out, format;
  std::vector<std::string> sets;
  bool selftest = false;
  app.add_option("--config", config, "key=value file, applied before flags");
  app.add_option("--surface", surface, "bolza or a preset file");
  app.add_option("--L", L, "grid: v1,v2,... or lo:hi:step");
  app.add_option("--eps", eps);
  app.add_option("--window", window, "l1,l2");
  app.add_option("--r", r, "r1,r2,r3");
  app.add_option("--seed", seed);
  app.add_option("--precision", precision)->check(CLI::IsMember({"double", "extended"}));
  app.add_option("--out", out, "output file, stdout if absent");
  app.add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--set", sets, "extra key=value settings")->take_all();
  app.add_flag("--selftest", selftest, "inject a known bug; the run must fail");
  for (const char* c : {"hexcheck", "sweep", "census", "pants", "clothesline", "equi"})
    app.add_subcommand(c)->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  hyp::lab::ExperimentConfig cfg;
  try {
    if (!config.empty()) hyp::lab::load_config(cfg, config);
    cfg.command = app.get_subcommands().front()->get_name();
    auto put = [&](const char* k, const std::string& v) {
      if (!v.empty()) apply_setting(cfg, k, v);
    };
    put("surface", surface);
    put("L", L);
    put("eps", eps);
    put("window", window);
    put("r", r);
    put("seed", seed);
    put("precision", precision);
    put("out", out);
    put("format", format);
    if (selftest) cfg.selftest = true;
    for (const auto& s : sets) {
      auto eq = s.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("--set needs key=value");
      apply_setting(cfg, s.substr(0, eq), s.substr(eq + 1));
    }
  } catch (const std::exception& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  hyp::lab::Report rep;
  try {
    rep = hyp::lab::run(cfg);
  } catch (const hyp::GeometryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }
  std::string fmt = cfg.format.empty() ? hyp::lab::default_format(cfg.command) : cfg.format;
  std::string text = hyp::lab::render(rep, fmt);
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write " << cfg.out << "\n";
      return 2;
    }
    f << text;
  }
  if (rep.exit_code != 0) std::cerr << cfg.command << ": assertion failure\n";
  return rep.exit_code;
}
