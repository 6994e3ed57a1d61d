#include "hyp/fuchsian.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <tuple>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <mutex>
#include <sstream>

#include "hyp/kernels.hpp"

#ifndef HYP_DATA_DIR
#define HYP_DATA_DIR "data"
#endif

namespace hyp {

std::vector<GroupElement> SurfaceGroup::letters() const {
  std::vector<GroupElement> out;
  for (const auto& g : gens) {
    out.push_back(g);
    out.push_back(g.inverse());
  }
  std::sort(out.begin(), out.end(), key_less);
  return out;
}

GroupElement SurfaceGroup::word(const std::string& w) const {
  GroupElement r;
  for (char ch : w) {
    bool inv = std::isupper(static_cast<unsigned char>(ch));
    int k = std::tolower(static_cast<unsigned char>(ch)) - 'a';
    if (k < 0 || k >= static_cast<int>(gens.size())) fail(Fault::BadPreset, "bad letter in word");
    r = r * (inv ? gens[static_cast<size_t>(k)].inverse() : gens[static_cast<size_t>(k)]);
  }
  return r;
}

double SurfaceGroup::relator_residual() const { return distance(word(relator), GroupElement()); }

double SurfaceGroup::step() const {
  double s = 0;
  for (const auto& g : gens) s = std::max(s, base_displacement(g));
  return s;
}

SurfaceGroup bolza() {
  SurfaceGroup G;
  G.label = "bolza";
  G.genus = 2;
  double len = 2 * std::acosh(1 + std::sqrt(2.0));
  for (int k = 0; k < 4; ++k) G.gens.push_back(Rot(k * kPi / 4) * hyp::G(len) * Rot(-k * kPi / 4));
  G.relator = "aBcDAbCd";
  G.covering_radius = std::acosh(3 + 2 * std::sqrt(2.0));
  return G;
}

namespace {

void validate(const SurfaceGroup& G) {
  if (G.gens.empty()) fail(Fault::BadPreset, "no generators");
  for (const auto& g : G.gens)
    if (!g.is_real() || classify(g) != Kind::Hyperbolic)
      fail(Fault::BadPreset, "generators must be real hyperbolic");
  if (!(G.covering_radius > 0)) fail(Fault::BadPreset, "covering radius missing");
  if (G.relator_residual() > 1e-9) fail(Fault::BadPreset, "relator is not the identity");
}

}  // namespace

SurfaceGroup load_surface(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Fault::BadPreset, "cannot open " + path);
  SurfaceGroup G;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "label") ls >> G.label;
    else if (tag == "genus") ls >> G.genus;
    else if (tag == "covering_radius") ls >> G.covering_radius;
    else if (tag == "relator") ls >> G.relator;
    else if (tag == "gen") {
      double a, b, c, d;
      if (!(ls >> a >> b >> c >> d)) fail(Fault::BadPreset, "gen needs four entries");
      G.gens.push_back(Mat(a, b, c, d));
    } else {
      fail(Fault::BadPreset, "unknown key " + tag);
    }
  }
  validate(G);
  return G;
}

void save_surface(const SurfaceGroup& G, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(Fault::BadPreset, "cannot write " + path);
  out << std::setprecision(17);
  out << "label " << G.label << "\n";
  out << "genus " << G.genus << "\n";
  out << "covering_radius " << G.covering_radius << "\n";
  out << "relator " << G.relator << "\n";
  for (const auto& g : G.gens)
    out << "gen " << g.a().real() << " " << g.b().real() << " " << g.c().real() << " "
        << g.d().real() << "\n";
}

SurfaceGroup surface_from_name(const std::string& name) {
  if (name.empty() || name == "bolza") return bolza();
  return load_surface(name);
}

Key element_key(const GroupElement& g) {
  Key k;
  for (int i = 0; i < 4; ++i) k[static_cast<size_t>(i)] = std::llround(g.entries()[static_cast<size_t>(i)].real() * 1e7);
  return k;
}

bool key_less(const GroupElement& g, const GroupElement& h) { return element_key(g) < element_key(h); }

namespace {

std::pair<std::int64_t, std::int64_t> cell_of(const GroupElement& g) {
  return {static_cast<std::int64_t>(std::floor(g.a().real() * 1e6)),
          static_cast<std::int64_t>(std::floor(g.b().real() * 1e6))};
}

bool close(const GroupElement& g, const GroupElement& h) {
  for (int i = 0; i < 4; ++i) {
    double x = g.entries()[static_cast<size_t>(i)].real(), y = h.entries()[static_cast<size_t>(i)].real();
    if (std::abs(x - y) > 1e-8 * (1 + std::abs(x))) return false;
  }
  return true;
}

}  // namespace

int TolerantIndex::find(const GroupElement& g) const {
  auto [ca, cb] = cell_of(g);
  for (std::int64_t i = -1; i <= 1; ++i)
    for (std::int64_t j = -1; j <= 1; ++j) {
      auto it = cells_.find({ca + i, cb + j});
      if (it == cells_.end()) continue;
      for (int s : it->second)
        if (close(items_[static_cast<size_t>(s)].first, g)) return items_[static_cast<size_t>(s)].second;
    }
  return -1;
}

int TolerantIndex::insert(const GroupElement& g, int id) {
  int f = find(g);
  if (f >= 0) return f;
  cells_[cell_of(g)].push_back(static_cast<int>(items_.size()));
  items_.push_back({g, id});
  return id;
}

namespace {

double min_separation(const std::vector<GroupElement>& els) {
  std::vector<const GroupElement*> v;
  for (const auto& g : els) v.push_back(&g);
  std::sort(v.begin(), v.end(),
            [](const GroupElement* x, const GroupElement* y) { return x->a().real() < y->a().real(); });
  double best = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size() && v[j]->a().real() - v[i]->a().real() < best; ++j)
      best = std::min(best, distance(*v[i], *v[j]));
  return best;
}

Ball build_ball(const SurfaceGroup& G, double R, const BallOptions& opt) {
  std::vector<GroupElement> letters = G.letters();
  double limit = R + opt.margin_steps * G.step();
  TolerantIndex index;
  std::vector<GroupElement> all{GroupElement()};
  std::vector<double> disp{0.0};
  index.insert(GroupElement(), 0);
  std::vector<GroupElement> frontier{GroupElement()};
  while (!frontier.empty()) {
    auto kids = expand_frontier(frontier, letters, limit, opt.parallel);
    std::vector<GroupElement> next;
    for (const auto& k : kids) {
      if (!k.keep) continue;
      int id = static_cast<int>(all.size());
      if (index.insert(k.g, id) != id) continue;
      all.push_back(k.g);
      disp.push_back(k.disp);
      next.push_back(k.g);
    }
    frontier = std::move(next);
  }
  Ball B;
  B.radius = R;
  B.visited = all.size();
  std::vector<size_t> order;
  for (size_t i = 0; i < all.size(); ++i)
    if (disp[i] <= R + 1e-12) order.push_back(i);
  std::sort(order.begin(), order.end(), [&](size_t x, size_t y) { return key_less(all[x], all[y]); });
  for (size_t i : order) {
    B.elements.push_back(all[i]);
    B.disp.push_back(disp[i]);
  }
  B.min_separation = min_separation(B.elements);
  return B;
}

}  // namespace

Ball ball(const SurfaceGroup& G, double R, const BallOptions& opt) {
  if (R > opt.cap) fail(Fault::CapExceeded, "ball radius exceeds the cap");
  if (!(R >= 0)) fail(Fault::BadParameters, "radius must be nonnegative");
  static std::mutex mu;
  static std::map<std::tuple<std::vector<Key>, std::int64_t, std::int64_t>, Ball> cache;
  std::vector<Key> gk;
  for (const auto& g : G.gens) gk.push_back(element_key(g));
  auto key = std::make_tuple(gk, std::llround(R * 1e9), std::llround(opt.margin_steps * 1e9));
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Ball B = build_ball(G, R, opt);
  std::lock_guard<std::mutex> lock(mu);
  if (cache.size() > 16) cache.clear();
  cache.emplace(key, B);
  return B;
}

Fold fold_point(const SurfaceGroup& G, cplx z) {
  std::vector<GroupElement> letters = G.letters();
  const cplx I(0, 1);
  Fold f;
  f.z = z;
  double d = hdist(z, I);
  for (int it = 0; it < 100000; ++it) {
    int best = -1;
    double bd = d;
    cplx bz;
    for (size_t k = 0; k < letters.size(); ++k) {
      cplx w = letters[k].act(f.z);
      double dk = hdist(w, I);
      if (dk < bd - 1e-13) {
        bd = dk;
        best = static_cast<int>(k);
        bz = w;
      }
    }
    if (best < 0) break;
    f.z = bz;
    f.c = letters[static_cast<size_t>(best)] * f.c;
    d = bd;
    ++f.steps;
  }
  return f;
}

}  // namespace hyp
