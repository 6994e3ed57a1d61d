#include "hyp/lab.hpp"

#include <cinttypes>
#include <cfloat>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <omp.h>

#include "hyp/equi.hpp"
#include "hyp/fuchsian.hpp"
#include "hyp/hexagon.hpp"
#include "hyp/stats.hpp"

namespace hyp::lab {

using nlohmann::json;

namespace {

std::vector<double> parse_list(const std::string& v) {
  std::vector<double> out;
  auto colon = v.find(':');
  if (colon != std::string::npos) {
    // lo:hi:step
    std::vector<double> p;
    std::stringstream ss(v);
    std::string tok;
    while (std::getline(ss, tok, ':')) p.push_back(std::stod(tok));
    if (p.size() != 3 || !(p[2] > 0) || p[1] < p[0]) throw std::invalid_argument("bad range " + v);
    int n = static_cast<int>(std::floor((p[1] - p[0]) / p[2] + 1e-9));
    for (int k = 0; k <= n; ++k) out.push_back(p[0] + k * p[2]);
    return out;
  }
  std::stringstream ss(v);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    out.push_back(std::stod(tok, &used));
    if (used != tok.size()) throw std::invalid_argument("bad number " + tok);
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

double parse_num(const std::string& v) {
  auto l = parse_list(v);
  if (l.size() != 1) throw std::invalid_argument("expected one number: " + v);
  return l[0];
}

int parse_int(const std::string& v) {
  std::size_t used = 0;
  int x = std::stoi(v, &used);
  if (used != v.size()) throw std::invalid_argument("bad integer " + v);
  return x;
}

bool parse_bool(const std::string& v) {
  if (v == "1" || v == "true" || v == "yes" || v.empty()) return true;
  if (v == "0" || v == "false" || v == "no") return false;
  throw std::invalid_argument("bad boolean " + v);
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

void use_threads(const ExperimentConfig& cfg) {
  if (cfg.threads > 0) omp_set_num_threads(cfg.threads);
}

std::vector<double> grid_or(const ExperimentConfig& cfg, std::vector<double> dflt) {
  return cfg.L.empty() ? dflt : cfg.L;
}

std::array<double, 2> window_or(const ExperimentConfig& cfg, std::array<double, 2> dflt) {
  return cfg.window_set ? cfg.window : dflt;
}

json element_json(const GroupElement& g) {
  return json::array({g.a().real(), g.b().real(), g.c().real(), g.d().real()});
}

std::string census_listing(const Census& C) {
  std::string s;
  char buf[128];
  for (const auto& c : C.classes) {
    std::snprintf(buf, sizeof buf, "%d %.9f %.9f %d %d %d\n", c.id, c.length, c.primitive_length,
                  c.multiplicity, c.orientation, c.inverse_id);
    s += buf;
  }
  return s;
}

void put_width(std::vector<std::string>& row, cplx w) {
  row.push_back(num(w.real()));
  row.push_back(num(w.imag()));
}

void width_cols(std::vector<std::string>& h, const std::string& name) {
  h.push_back(name + "_re");
  h.push_back(name + "_im");
}

}  // namespace

void apply_setting(ExperimentConfig& cfg, const std::string& key, const std::string& value) {
  const std::string& v = value;
  if (key == "command") cfg.command = v;
  else if (key == "surface") cfg.surface = v;
  else if (key == "L") cfg.L = parse_list(v);
  else if (key == "eps") cfg.eps = parse_num(v);
  else if (key == "window") {
    auto w = parse_list(v);
    if (w.size() != 2 || !(w[1] > w[0])) throw std::invalid_argument("window needs l1 < l2");
    cfg.window = {w[0], w[1]};
    cfg.window_set = true;
  } else if (key == "r") {
    auto r = parse_list(v);
    if (r.size() != 3) throw std::invalid_argument("r needs three values");
    cfg.r = {r[0], r[1], r[2]};
  } else if (key == "seed") {
    std::size_t used = 0;
    cfg.seed = std::stoull(v, &used);
    if (used != v.size()) throw std::invalid_argument("bad seed " + v);
  } else if (key == "precision") {
    if (v == "double") cfg.precision = Precision::Double;
    else if (v == "extended") cfg.precision = Precision::Extended;
    else throw std::invalid_argument("precision is double or extended");
  } else if (key == "out") cfg.out = v;
  else if (key == "format") {
    if (v != "csv" && v != "json") throw std::invalid_argument("format is csv or json");
    cfg.format = v;
  } else if (key == "selftest") cfg.selftest = parse_bool(v);
  else if (key == "draws") cfg.draws = parse_int(v);
  else if (key == "threads") cfg.threads = parse_int(v);
  else if (key == "parallel") cfg.parallel = parse_bool(v);
  else if (key == "cap") cfg.cap = parse_num(v);
  else if (key == "a") cfg.a = parse_num(v);
  else if (key == "b") cfg.b = parse_num(v);
  else if (key == "c") cfg.c = parse_num(v);
  else if (key == "M") cfg.M = parse_num(v);
  else if (key == "gamma") cfg.gamma = parse_int(v);
  else if (key == "from") cfg.from = parse_int(v);
  else if (key == "to") cfg.to = parse_int(v);
  else if (key == "n_max") cfg.n_max = parse_int(v);
  else if (key == "sigma_length") cfg.sigma_length = parse_num(v);
  else if (key == "angle") {
    auto a = parse_list(v);
    if (a.size() != 2 || !(a[1] > a[0])) throw std::invalid_argument("angle needs a1 < a2");
    cfg.a1 = a[0];
    cfg.a2 = a[1];
  } else if (key == "T") cfg.T = parse_num(v);
  else if (key == "step") cfg.step = parse_num(v);
  else if (key == "samples") cfg.samples = parse_int(v);
  else if (key == "spatial") cfg.spatial = parse_int(v);
  else if (key == "angular") cfg.angular = parse_int(v);
  else throw std::invalid_argument("unknown key " + key);
}

void load_config(ExperimentConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read config " + path);
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument(path + ":" + std::to_string(n) + ": expected key=value");
    apply_setting(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string to_csv(const Table& t) {
  std::string s;
  for (std::size_t i = 0; i < t.header.size(); ++i) s += (i ? "," : "") + t.header[i];
  s += "\n";
  for (const auto& r : t.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + r[i];
    s += "\n";
  }
  return s;
}

json to_json(const Report& r) {
  json j = r.summary;
  if (!r.table.header.empty()) {
    json rows = json::array();
    for (const auto& row : r.table.rows) {
      json o = json::object();
      for (std::size_t i = 0; i < row.size() && i < r.table.header.size(); ++i) {
        const std::string& cell = row[i];
        char* end = nullptr;
        double v = std::strtod(cell.c_str(), &end);
        if (!cell.empty() && end && *end == 0 && std::isfinite(v)) o[r.table.header[i]] = v;
        else o[r.table.header[i]] = cell;
      }
      rows.push_back(o);
    }
    j["rows"] = rows;
  }
  j["exit_code"] = r.exit_code;
  return j;
}

std::string render(const Report& r, const std::string& format) {
  if (format == "csv") {
    if (!r.table.header.empty()) return to_csv(r.table);
    // summary-only commands: flatten scalars
    Table t;
    t.header = {"key", "value"};
    for (auto it = r.summary.begin(); it != r.summary.end(); ++it)
      if (it.value().is_primitive()) t.rows.push_back({it.key(), it.value().dump()});
    return to_csv(t);
  }
  return to_json(r).dump(2) + "\n";
}

std::string digest(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[24];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
  return buf;
}

std::string default_format(const std::string& command) {
  return command == "hexcheck" || command == "sweep" ? "csv" : "json";
}

Report cmd_hexcheck(const ExperimentConfig& cfg) {
  use_threads(cfg);
  auto grid = grid_or(cfg, {4, 20});
  double Llo = *std::min_element(grid.begin(), grid.end());
  double Lhi = *std::max_element(grid.begin(), grid.end());
  if (cfg.draws < 1) throw std::invalid_argument("draws must be positive");
  Rng rng(cfg.seed);
  struct Draw {
    double a, b, c, L, M;
  };
  std::vector<Draw> draws(static_cast<std::size_t>(cfg.draws));
  for (auto& d : draws) {
    d.a = rng.uniform(0.5, 2);
    d.b = rng.uniform(-1, 1);
    d.c = rng.uniform(-1, 1);
    d.L = rng.uniform(Llo, Lhi);
    d.M = rng.uniform(0.2, 2);
  }
  Report rep;
  auto& h = rep.table.header;
  h = {"draw", "a", "b", "c", "d", "L", "J", "M", "degenerate"};
  for (const char* n : {"H2_geo", "H4_geo", "H5_geo", "H6_geo", "H2_exact", "H4_exact", "H5_exact",
                        "H4_asym", "H5_asym"})
    width_cols(h, n);
  for (const char* n : {"res_H2", "res_H4", "res_H6", "res_laws", "err_H4", "err_H5", "budget_H4",
                        "budget_H5"})
    h.push_back(n);
  std::vector<std::vector<std::string>> rows(draws.size());
  std::vector<double> worst(draws.size(), 0.0), worst6(draws.size(), 0.0);
  auto one = [&](std::size_t i) {
    const Draw& d = draws[i];
    HexParams p = make_params(d.a, d.b, d.c, d.L, std::exp(d.L / 2), d.M);
    std::vector<std::string>& row = rows[i];
    row = {std::to_string(i), num(d.a), num(d.b), num(d.c), num(p.d.real()), num(d.L),
           num(std::exp(d.L / 2)), num(d.M)};
    HexagonH hx;
    try {
      hx = build_hexagon(p);
    } catch (const GeometryError& e) {
      if (e.fault() != Fault::DegenerateHexagon) {
        worst[i] = std::numeric_limits<double>::infinity();
        row.push_back(std::string("error ") + fault_name(e.fault()));
      } else {
        row.push_back("1");
      }
      while (row.size() < h.size()) row.push_back("");
      return;
    }
    row.push_back("0");
    ExactWidths ew = exact_widths(p, &hx, cfg.precision);
    for (int k : {1, 3, 4, 5}) put_width(row, hx.width[static_cast<std::size_t>(k)].value());
    put_width(row, ew.H2.value());
    put_width(row, ew.H4.value());
    put_width(row, ew.H5.value());
    double e4 = std::numeric_limits<double>::quiet_NaN(), e5 = e4, b4 = e4, b5 = e4;
    try {
      AsymptoticWidths as = asymptotic_widths(p, &hx);
      put_width(row, as.H4s.value());
      put_width(row, as.H5s.value());
      e4 = strip_distance(ew.H4.value(), as.H4s.value());
      e5 = strip_distance(ew.H5.value(), as.H5s.value());
      b4 = as.budget4;
      b5 = as.budget5;
    } catch (const GeometryError&) {
      for (int k = 0; k < 4; ++k) row.push_back("");
    }
    cplx c2 = ew.coshH2, c4 = ew.coshH4;
    if (cfg.selftest) c2 = -c2;
    double r2 = std::abs(std::cosh(hx.width[1].value()) - c2) / std::abs(c2);
    double r4 = std::abs(std::cosh(hx.width[3].value()) - c4) / std::max(std::abs(c4), 1e-300);
    double r6 = strip_distance(hx.width[5].value(), cplx(d.M, kPi));
    std::array<cplx, 6> H;
    for (std::size_t k = 0; k < 6; ++k) H[k] = hx.width[k].value();
    double rl = law_residuals(H).worst();
    for (double v : {r2, r4, r6, rl, e4, e5, b4, b5}) row.push_back(num(v));
    worst[i] = std::max(r2, r4);
    worst6[i] = r6;
  };
  if (cfg.parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < draws.size(); ++i) one(i);
  } else {
    for (std::size_t i = 0; i < draws.size(); ++i) one(i);
  }
  rep.table.rows = std::move(rows);
  double w = *std::max_element(worst.begin(), worst.end());
  double w6 = *std::max_element(worst6.begin(), worst6.end());
  int degenerate = 0;
  for (const auto& r : rep.table.rows) degenerate += r[8] == "1";
  rep.summary = {{"command", "hexcheck"}, {"draws", cfg.draws},       {"seed", cfg.seed},
                 {"worst_cosh_residual", w}, {"worst_H6_residual", w6}, {"degenerate", degenerate},
                 {"selftest", cfg.selftest}};
  rep.exit_code = (w <= 1e-9 && w6 <= 1e-10) ? 0 : 1;
  return rep;
}

namespace {

struct Estimator {
  std::string name;
  double predicted;
  bool one_sided;  // slope must be at most predicted * 0.85
  double tol = 0.15;
};

}  // namespace

Report cmd_sweep(const ExperimentConfig& cfg) {
  use_threads(cfg);
  auto grid = grid_or(cfg, {6, 8, 10, 12, 14, 16, 18, 20, 22, 24});
  if (grid.size() < 2) throw std::invalid_argument("sweep needs two or more L values");
  const double a = cfg.a, b = cfg.b, c = cfg.c, M = cfg.M, d = (1 + b * c) / a;
  const std::vector<Estimator> est = {
      {"H4", -1, false},           {"H5", -1, false},         {"translation", -1, false},
      {"parallel_perp", -1, false}, {"parallel_foot", -1, false}, {"perp_foot", -1, true},
      {"perp_angle", -1, true},    {"lemma_x", -0.25, false}};
  const std::size_t ne = est.size(), nl = grid.size();
  std::vector<double> exact(ne * nl), approx(ne * nl);
  auto one = [&](std::size_t li) {
    double L = grid[li];
    HexParams p = make_params(a, b, c, L, std::exp(L / 2), M);
    HexagonH hx = build_hexagon(p);
    ExactWidths ew = exact_widths(p, &hx, cfg.precision);
    AsymptoticWidths as = asymptotic_widths(p, &hx);
    cplx h4s = as.H4s.value();
    if (cfg.selftest) h4s = M - as.xs;
    ParallelReport par = parallel_report(a, b, c, d, L, M, cfg.precision);
    PerpReport per = perp_report(a, b, c, d, L, cfg.precision);
    LemmaXReport lx = lemma_x_report(a, b, c, d, L, M, 0, 0, 0.25, 1, cfg.precision);
    double len = displacement(G(L) * Mat(a, b, c, d)).re();
    double ex[] = {0, 0, len, par.perp_exact, par.foot_exact, per.foot_exact, per.angle_exact,
                   lx.exact};
    double ap[] = {strip_distance(ew.H4.value(), h4s), strip_distance(ew.H5.value(), as.H5s.value()),
                   L + 2 * std::log(a), par.perp_length, par.foot_shift, per.foot, per.angle, lx.M};
    for (std::size_t e = 0; e < ne; ++e) {
      exact[e * nl + li] = ex[e];
      approx[e * nl + li] = ap[e];
    }
  };
  std::vector<std::exception_ptr> errs(nl);
  auto guarded = [&](std::size_t li) {
    try {
      one(li);
    } catch (...) {
      errs[li] = std::current_exception();
    }
  };
  if (cfg.parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::size_t li = 0; li < nl; ++li) guarded(li);
  } else {
    for (std::size_t li = 0; li < nl; ++li) guarded(li);
  }
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
  Report rep;
  rep.table.header = {"estimator", "a", "b", "c", "d", "M", "L", "exact", "estimate", "error",
                      "predicted_slope", "slope", "in_fit", "pass"};
  json slopes = json::object();
  for (std::size_t e = 0; e < ne; ++e) {
    std::vector<double> xs, ys, errs;
    std::vector<bool> fitted;
    for (std::size_t li = 0; li < nl; ++li) {
      double err = e < 2 ? approx[e * nl + li] : std::abs(exact[e * nl + li] - approx[e * nl + li]);
      errs.push_back(err);
      // differences near the rounding level of the exact value carry no slope information
      double scale = e < 2 ? std::abs(M) + 1 : std::abs(exact[e * nl + li]);
      bool resolved = err > 64 * DBL_EPSILON * scale;
      fitted.push_back(resolved);
      if (!resolved) continue;
      xs.push_back(grid[li]);
      ys.push_back(std::log(err));
    }
    double s = xs.size() >= 3 ? fit_line(xs, ys).slope : NAN;
    const Estimator& E = est[e];
    bool ok = std::isfinite(s) &&
              (E.one_sided ? s <= E.predicted * (1 - E.tol)
                           : std::abs(s - E.predicted) <= E.tol * std::abs(E.predicted));
    if (!ok) rep.exit_code = 1;
    slopes[E.name] = {{"slope", s}, {"predicted", E.predicted}, {"pass", ok}, {"fit_points", xs.size()}};
    for (std::size_t li = 0; li < nl; ++li) {
      bool gap = e < 2;
      rep.table.rows.push_back({E.name, num(a), num(b), num(c), num(d), num(M), num(grid[li]),
                                gap ? "" : num(exact[e * nl + li]),
                                gap ? "" : num(approx[e * nl + li]), num(errs[li]),
                                num(E.predicted), num(s), fitted[li] ? "1" : "0", ok ? "1" : "0"});
    }
  }
  rep.summary = {{"command", "sweep"}, {"slopes", slopes}, {"selftest", cfg.selftest}};
  return rep;
}

Report cmd_census(const ExperimentConfig& cfg) {
  use_threads(cfg);
  SurfaceGroup G = surface_from_name(cfg.surface);
  auto grid = grid_or(cfg, {0});
  auto w = window_or(cfg, {3.0, 3.1});
  CensusOptions opt;
  opt.cap = cfg.cap;
  opt.parallel = cfg.parallel;
  Report rep;
  json runs = json::array();
  for (double L : grid) {
    Census C = census(G, L, w[0], w[1], opt);
    if (cfg.selftest && !C.classes.empty()) C.classes.pop_back();
    json classes = json::array();
    bool symmetric = true;
    for (const auto& c : C.classes) {
      classes.push_back({{"id", c.id},
                         {"length", c.length},
                         {"primitive_length", c.primitive_length},
                         {"multiplicity", c.multiplicity},
                         {"orientation", c.orientation},
                         {"inverse_id", c.inverse_id},
                         {"members", c.members},
                         {"rep", element_json(c.rep)}});
      int inv = c.inverse_id;
      if (inv < 0 || inv >= static_cast<int>(C.classes.size()) ||
          std::abs(C.classes[static_cast<std::size_t>(inv)].length - c.length) > 1e-9)
        symmetric = false;
    }
    int n = static_cast<int>(C.classes.size());
    bool even = n % 2 == 0;
    if (!even || !symmetric) rep.exit_code = 1;
    json run = {{"L", L},
                {"window", {w[0], w[1]}},
                {"ball_radius", C.ball_radius},
                {"count", n},
                {"even", even},
                {"inverse_symmetric", symmetric},
                {"min_separation", C.min_separation},
                {"fold_misses", C.fold_misses},
                {"hash", digest(census_listing(C))},
                {"classes", classes}};
    if (L > 0) {
      CountParams cp;
      cp.genus = G.genus;
      cp.L = L;
      cp.l1 = w[0];
      cp.l2 = w[1];
      double pred = predicted_counts(Formula::Geodesics, cp);
      run["predicted"] = pred;
      run["ratio"] = n / pred;
    }
    runs.push_back(run);
  }
  rep.summary = {{"command", "census"},
                 {"surface", G.label},
                 {"relator_residual", G.relator_residual()},
                 {"runs", runs},
                 {"selftest", cfg.selftest}};
  return rep;
}

namespace {

// recomputes the pair from its two elements and checks the windows
bool validate(const PantsHit& h, double r2, double r3, double L, double eps) {
  PantsPair q;
  try {
    q = pants_from_pair(h.pp.g1, h.pp.g2);
  } catch (const GeometryError&) {
    return false;
  }
  return std::abs(q.l3 - h.pp.l3) <= 1e-7 * (1 + q.l3) && q.word_residual <= 1e-7 &&
         std::abs(q.l2 - r2 * L) < eps && std::abs(q.l3 - r3 * L) < eps;
}

json pants_json(const PantsHit& h, bool valid) {
  return {{"l1", h.pp.l1},
          {"l2", h.pp.l2},
          {"l3", h.pp.l3},
          {"M", h.pp.M},
          {"foot", h.foot},
          {"pants_id", h.pants_id},
          {"product_word", h.pp.product_word},
          {"word_residual", h.pp.word_residual},
          {"valid", valid}};
}

}  // namespace

Report cmd_pants(const ExperimentConfig& cfg) {
  use_threads(cfg);
  SurfaceGroup G = surface_from_name(cfg.surface);
  auto grid = grid_or(cfg, {2 * std::acosh(1 + std::sqrt(2.0))});
  auto [r1, r2, r3] = cfg.r;
  CensusOptions co;
  co.cap = cfg.cap;
  co.parallel = cfg.parallel;
  PantsCensusOptions po;
  po.cap = cfg.cap;
  po.parallel = cfg.parallel;
  Report rep;
  json runs = json::array();
  for (double L : grid) {
    double l1 = r1 * L;
    Census C = census(G, 0, l1 - cfg.eps, l1 + cfg.eps, co);
    json run = {{"L", L}, {"eps", cfg.eps}, {"r", {r1, r2, r3}}, {"classes", C.classes.size()}};
    if (cfg.gamma < 0 || cfg.gamma >= static_cast<int>(C.classes.size())) {
      run["gamma"] = nullptr;
      run["pairs"] = json::array();
      run["count"] = 0;
      runs.push_back(run);
      continue;
    }
    const GeodesicClass& g = C.classes[static_cast<std::size_t>(cfg.gamma)];
    PantsCensus P = pants_census(G, g, r1, r2, r3, L, cfg.eps, po);
    json pairs = json::array();
    bool all = true;
    for (std::size_t i = 0; i < P.pairs.size(); ++i) {
      PantsHit h = P.pairs[i];
      if (cfg.selftest && i == 0) h.pp.l3 += 1;
      bool ok = validate(h, r2, r3, L, cfg.eps);
      all = all && ok;
      pairs.push_back(pants_json(h, ok));
    }
    if (!all) rep.exit_code = 1;
    run["gamma"] = {{"id", g.id}, {"length", g.length}, {"primitive_length", g.primitive_length}};
    run["pairs"] = pairs;
    run["count"] = P.pairs.size();
    run["pants_count"] = P.pants_count;
    run["M_plus"] = P.M_plus;
    run["tiles"] = P.tiles;
    run["ball_radius"] = P.ball_radius;
    run["all_valid"] = all;
    try {
      CountParams cp;
      cp.genus = G.genus;
      cp.L = L;
      cp.eps = cfg.eps;
      cp.r1 = r1;
      cp.r2 = r2;
      cp.r3 = r3;
      cp.gamma_length = g.length;
      cp.gamma_primitive_length = g.primitive_length;
      double pred = predicted_counts(Formula::PantsGivenGamma, cp);
      run["predicted"] = pred;
      run["ratio"] = P.pants_count / pred;
    } catch (const GeometryError&) {
      run["predicted"] = nullptr;
    }
    std::string listing;
    for (const auto& h : P.pairs) listing += num(h.pp.l2) + " " + num(h.pp.l3) + "\n";
    run["hash"] = digest(listing);
    runs.push_back(run);
  }
  rep.summary = {{"command", "pants"}, {"surface", G.label}, {"runs", runs}, {"selftest", cfg.selftest}};
  return rep;
}

Report cmd_clothesline(const ExperimentConfig& cfg) {
  use_threads(cfg);
  SurfaceGroup G = surface_from_name(cfg.surface);
  auto grid = grid_or(cfg, {2 * std::acosh(1 + std::sqrt(2.0))});
  CensusOptions co;
  co.cap = cfg.cap;
  co.parallel = cfg.parallel;
  PantsCensusOptions po;
  po.cap = cfg.cap;
  po.parallel = cfg.parallel;
  Report rep;
  json runs = json::array();
  for (double L : grid) {
    Census C = census(G, 0, L - cfg.eps, L + cfg.eps, co);
    json run = {{"L", L}, {"eps", cfg.eps}, {"classes", C.classes.size()}, {"from", cfg.from},
                {"to", cfg.to}};
    Clothesline cl = clothesline_search(G, C, cfg.from, cfg.to, L, cfg.eps, cfg.n_max, po);
    if (cfg.selftest && cl.found) cl.geodesics.push_back(cfg.from);
    bool ok = true;
    if (cl.found) {
      ok = !cl.geodesics.empty() && cl.geodesics.front() == cfg.from &&
           cl.geodesics.back() == cfg.to && cl.pants.size() + 1 == cl.geodesics.size() &&
           static_cast<int>(cl.geodesics.size()) <= cfg.n_max;
      for (const auto& h : cl.pants) ok = ok && validate(h, 1, 1, L, cfg.eps);
    }
    if (!ok) rep.exit_code = 1;
    run["found"] = cl.found;
    run["geodesics"] = cl.geodesics;
    run["length"] = cl.geodesics.size();
    run["explored"] = cl.explored;
    run["valid"] = ok;
    runs.push_back(run);
  }
  rep.summary = {{"command", "clothesline"}, {"surface", G.label}, {"runs", runs},
                 {"selftest", cfg.selftest}};
  return rep;
}

Report cmd_equi(const ExperimentConfig& cfg) {
  use_threads(cfg);
  SurfaceGroup G = surface_from_name(cfg.surface);
  auto grid = grid_or(cfg, {4, 6, 8});
  auto w = window_or(cfg, {0, 1});
  CensusOptions co;
  co.cap = cfg.cap;
  co.parallel = cfg.parallel;
  Report rep;

  EmpiricalMeasure uni = uniform_measure(cfg.spatial, cfg.angular);
  if (cfg.selftest) {
    uni.mass[0] += 0.5 / uni.bins();
    uni.mass[1] -= 0.5 / uni.bins();
  }
  EmpiricalMeasure pm = point_mass(G, Frame(), cfg.spatial, cfg.angular);
  double tv_uni = tv_uniform(uni), tv_pm = tv_uniform(pm);
  double tv_max = 1.0 - 1.0 / uni.bins();
  bool self_ok = tv_uni <= 1e-12 && std::abs(tv_pm - tv_max) <= 1e-12;
  if (!self_ok) rep.exit_code = 1;

  json runs = json::array();
  for (double L : grid) {
    Census C = census(G, L, w[0], w[1], co);
    json run = {{"L", L}, {"window", {w[0], w[1]}}, {"classes", C.classes.size()}};
    if (C.classes.empty()) {
      run["nu_tv"] = nullptr;
      runs.push_back(run);
      continue;
    }
    EmpiricalMeasure nu = nu_L(G, C, cfg.step, cfg.spatial, cfg.angular);
    EmpiricalMeasure one = nu_classes(G, C, {0}, cfg.step, cfg.spatial, cfg.angular);
    double tv = tv_uniform(nu);
    bool ok = std::isfinite(tv) && std::abs(nu.total() - 1) <= 1e-12;
    if (!ok) rep.exit_code = 1;
    PairMeasure mu = mu_pairs(G, Frame(), cfg.T, L, cfg.samples, cfg.spatial, cfg.angular,
                              cfg.parallel);
    AngleCount ac = angle_count(G, C, Frame(), cfg.sigma_length, cfg.a1, cfg.a2);
    run["nu_tv"] = tv;
    run["nu_mass"] = nu.mass;
    run["single_class_tv"] = tv_uniform(one);
    run["mu_pairs_tv"] = mu.tv;
    run["angle"] = {{"sigma_length", cfg.sigma_length}, {"a", {cfg.a1, cfg.a2}},
                    {"crossings", ac.crossings}, {"hits", ac.hits},
                    {"predicted", ac.predicted}, {"ratio", ac.hits / ac.predicted}};
    run["hash"] = digest(json(nu.mass).dump());
    runs.push_back(run);
  }
  rep.summary = {{"command", "equi"},
                 {"note", "diagnostics only: finite L is far from the asymptotic regime, and the "
                          "preset surface is arithmetic, so the equidistribution theorems' "
                          "hypothesis fails for it"},
                 {"surface", G.label},
                 {"bins", uni.bins()},
                 {"selftest_uniform_tv", tv_uni},
                 {"selftest_point_mass_tv", tv_pm},
                 {"tv_max", tv_max},
                 {"runs", runs},
                 {"selftest", cfg.selftest}};
  return rep;
}

Report run(const ExperimentConfig& cfg) {
  const std::string& c = cfg.command;
  if (c == "hexcheck") return cmd_hexcheck(cfg);
  if (c == "sweep") return cmd_sweep(cfg);
  if (c == "census") return cmd_census(cfg);
  if (c == "pants") return cmd_pants(cfg);
  if (c == "clothesline") return cmd_clothesline(cfg);
  if (c == "equi") return cmd_equi(cfg);
  throw std::invalid_argument("unknown command " + c);
}

}  // namespace hyp::lab
