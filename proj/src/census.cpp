#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>

#include "hyp/fuchsian.hpp"
#include "hyp/kernels.hpp"

namespace hyp {

namespace {

const cplx kI(0, 1);
const double kOffset = 1e-6;
const double kAxisSlack = 1e-5;

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[static_cast<size_t>(x)] != x) x = p[static_cast<size_t>(x)] = p[static_cast<size_t>(p[static_cast<size_t>(x)])];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) p[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
  }
};

bool hyperbolic(const GroupElement& g) { return std::abs(g.trace().real()) > 2 + 1e-9; }
double tr_length(const GroupElement& g) { return displacement(g).re(); }

// radius of the ball holding every element of translation length <= len whose axis passes within r of i
double axis_ball_radius(double len, double r) {
  return 2 * std::asinh(std::cosh(r) * std::sinh(len / 2));
}

}  // namespace

Census census(const SurfaceGroup& G, double L, double l1, double l2, const CensusOptions& opt) {
  if (!(l2 > l1)) fail(Fault::BadParameters, "empty window");
  if (L + l2 > opt.cap) fail(Fault::CapExceeded, "window exceeds the cap");
  const double rho = G.covering_radius;
  Census C;
  C.L = L;
  C.l1 = l1;
  C.l2 = l2;
  C.ball_radius = axis_ball_radius(std::max(0.0, L + l2), rho) + 1e-9;
  BallOptions bo;
  bo.cap = opt.cap;
  bo.parallel = opt.parallel;
  bo.margin_steps = opt.margin_steps;
  Ball B = ball(G, C.ball_radius, bo);
  C.min_separation = B.min_separation;

  // hyperbolic elements with axis near i, by length, for root extraction
  std::vector<std::pair<double, int>> near_axis;
  for (size_t k = 0; k < B.elements.size(); ++k) {
    const auto& g = B.elements[k];
    if (!hyperbolic(g)) continue;
    if (distance_to_geodesic(axis(g), kI) > rho + kAxisSlack) continue;
    double len = tr_length(g);
    near_axis.push_back({len, static_cast<int>(k)});
    if (len > L + l1 && len < L + l2) C.candidates.push_back(g);
  }
  std::sort(near_axis.begin(), near_axis.end());
  for (size_t k = 0; k < C.candidates.size(); ++k) C.index.insert(C.candidates[k], static_cast<int>(k));

  const long n = static_cast<long>(C.candidates.size());
  std::vector<std::vector<int>> links(static_cast<size_t>(n));
  std::vector<int> misses(static_cast<size_t>(n), 0);
  auto body = [&](long i) {
    const GroupElement& g = C.candidates[static_cast<size_t>(i)];
    OrientedGeodesic ax = axis(g);
    double len = tr_length(g), t0 = axis_coordinate(ax, kI);
    int ns = std::max(1, static_cast<int>(std::ceil(len / opt.sample_step)));
    for (int k = 0; k < ns; ++k) {
      double t = t0 - len / 2 + len * k / ns;
      // both sides, so axes lying on tile edges reach the tiles on either side
      for (double eta : {-kOffset, kOffset}) {
        Fold f = fold_point(G, offset_point(ax, t, eta));
        int j = C.index.find(f.c * g * f.c.inverse());
        if (j < 0) ++misses[static_cast<size_t>(i)];
        else links[static_cast<size_t>(i)].push_back(j);
      }
    }
  };
  if (opt.parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) body(i);
  } else {
    for (long i = 0; i < n; ++i) body(i);
  }
  UnionFind uf(static_cast<size_t>(n));
  for (long i = 0; i < n; ++i) {
    for (int j : links[static_cast<size_t>(i)]) uf.unite(static_cast<int>(i), j);
    C.fold_misses += misses[static_cast<size_t>(i)];
  }

  // candidates are key-sorted, so the root (smallest index) is the smallest key
  std::vector<int> roots;
  std::vector<int> members(static_cast<size_t>(n), 0);
  for (long i = 0; i < n; ++i) {
    int r = uf.find(static_cast<int>(i));
    if (r == i) roots.push_back(r);
    ++members[static_cast<size_t>(r)];
  }
  std::sort(roots.begin(), roots.end(), [&](int x, int y) {
    auto lx = std::llround(tr_length(C.candidates[static_cast<size_t>(x)]) * 1e9);
    auto ly = std::llround(tr_length(C.candidates[static_cast<size_t>(y)]) * 1e9);
    if (lx != ly) return lx < ly;
    return key_less(C.candidates[static_cast<size_t>(x)], C.candidates[static_cast<size_t>(y)]);
  });
  std::vector<int> class_of_root(static_cast<size_t>(n), -1);
  for (size_t c = 0; c < roots.size(); ++c) class_of_root[static_cast<size_t>(roots[c])] = static_cast<int>(c);
  C.candidate_class.resize(static_cast<size_t>(n));
  for (long i = 0; i < n; ++i)
    C.candidate_class[static_cast<size_t>(i)] = class_of_root[static_cast<size_t>(uf.find(static_cast<int>(i)))];

  double shortest = near_axis.empty() ? 1.0 : near_axis.front().first;
  for (size_t c = 0; c < roots.size(); ++c) {
    GeodesicClass gc;
    gc.id = static_cast<int>(c);
    gc.rep = C.candidates[static_cast<size_t>(roots[c])];
    gc.length = tr_length(gc.rep);
    gc.members = members[static_cast<size_t>(roots[c])];
    gc.primitive = gc.rep;
    gc.primitive_length = gc.length;
    int mmax = static_cast<int>(std::floor(gc.length / shortest + 1e-9));
    for (int m = mmax; m >= 2; --m) {
      double target = gc.length / m;
      auto lo = std::lower_bound(near_axis.begin(), near_axis.end(), std::make_pair(target - 1e-7, -1));
      bool done = false;
      for (auto it = lo; it != near_axis.end() && it->first <= target + 1e-7; ++it) {
        const GroupElement& h = B.elements[static_cast<size_t>(it->second)];
        GroupElement hm = h.pow(m);
        double scale = std::abs(gc.rep.a()) + std::abs(gc.rep.b()) + std::abs(gc.rep.c()) + std::abs(gc.rep.d());
        if (distance(hm, gc.rep) <= 1e-8 * scale) {
          gc.multiplicity = m;
          gc.primitive = h;
          gc.primitive_length = tr_length(h);
          done = true;
          break;
        }
      }
      if (done) break;
    }
    C.classes.push_back(gc);
  }
  for (auto& gc : C.classes) {
    int j = C.index.find(gc.rep.inverse());
    gc.inverse_id = j < 0 ? -1 : C.candidate_class[static_cast<size_t>(j)];
    gc.orientation = gc.inverse_id < 0 || gc.id < gc.inverse_id ? 1 : -1;
  }
  return C;
}

int Census::class_of(const SurfaceGroup& G, const GroupElement& h) const {
  if (!h.is_real() || !hyperbolic(h)) return -1;
  OrientedGeodesic ax = axis(h);
  Fold f = fold_point(G, point_at(ax, axis_coordinate(ax, kI)));
  int j = index.find(f.c * h * f.c.inverse());
  return j < 0 ? -1 : candidate_class[static_cast<size_t>(j)];
}

std::vector<GHit> g_search(const SurfaceGroup& G, const Frame& w, double L, double eps,
                           const GSearchOptions& opt) {
  if (!(L > 0) || !(eps > 0)) fail(Fault::BadParameters, "L and eps must be positive");
  if (opt.unique && eps > opt.eps_unique)
    fail(Fault::BadParameters, "eps above the uniqueness threshold");
  if (L + eps > opt.cap) fail(Fault::CapExceeded, "L + eps exceeds the cap");
  double t_max = opt.t_max >= 0 ? opt.t_max : opt.L0 * std::exp(-L / 2);
  double t_step = opt.t_step > 0 ? opt.t_step : t_max / 1000;
  std::vector<double> ts;
  if (t_max <= 0 || t_step <= 0) ts.push_back(0);
  else {
    long nt = static_cast<long>(std::floor(t_max / t_step + 1e-9));
    for (long k = 0; k <= nt; ++k) ts.push_back(k * t_step);
  }
  double R = L + eps + 2 * hdist(basepoint(w), kI) + 2 * t_max + 0.1;
  BallOptions bo;
  bo.cap = opt.cap;
  bo.parallel = opt.parallel;
  Ball B = ball(G, R, bo);
  std::vector<GroupElement> cands;
  for (const auto& g : B.elements)
    if (hyperbolic(g) && std::abs(tr_length(g) - L) <= eps + 0.5) cands.push_back(g);
  BoxX X = b_epsilon(eps);
  auto raw = scan_times(w, L, ts, cands, X, opt.parallel);
  std::vector<GHit> hits;
  for (size_t k = 0; k < raw.size(); ++k) {
    GHit h;
    h.t = ts[static_cast<size_t>(raw[k].t_index)];
    h.g = cands[static_cast<size_t>(raw[k].g_index)];
    Frame wt = push_right(w, h.t);
    h.m = (wt * hyp::G(L / 2)).inverse() * h.g * (wt * hyp::G(-L / 2));
    if (!b_membership(h.m, X)) fail(Fault::BadParameters, "scan hit fails membership replay");
    h.F = F_coords(h.m);
    if (opt.unique && k > 0 && raw[k - 1].t_index == raw[k].t_index)
      fail(Fault::AmbiguousHit, "two elements qualify at one time");
    hits.push_back(h);
  }
  return hits;
}

PantsCensus pants_census(const SurfaceGroup& G, const GeodesicClass& gamma, double r1, double r2,
                         double r3, double L, double eps, const PantsCensusOptions& opt) {
  if (!(eps > 0) || !(L > 0)) fail(Fault::BadParameters, "L and eps must be positive");
  const double l1 = gamma.length;
  if (!(std::abs(l1 - r1 * L) < eps)) fail(Fault::BadParameters, "gamma length outside r1 L +- eps");
  for (double r : {r1, r2, r3})
    if (r * L + eps > opt.cap) fail(Fault::CapExceeded, "r L + eps exceeds the cap");
  PantsCensus P;
  const double rho = G.covering_radius;
  double lo2 = r2 * L - eps, hi2 = r2 * L + eps;
  double num = std::cosh((r3 * L + eps) / 2) + std::cosh(l1 / 2) * std::cosh(std::max(lo2, 0.0) / 2);
  double den = std::sinh(l1 / 2) * std::sinh(std::max(lo2, 1e-12) / 2);
  if (!(num / den >= 1)) return P;
  P.M_plus = std::acosh(num / den);

  const GroupElement& g = gamma.rep;
  OrientedGeodesic ax = axis(g);
  double s0 = axis_coordinate(ax, kI);
  double lp = gamma.primitive_length;
  GroupElement p = gamma.primitive;
  // primitive translating the same way as g
  if (!same_geodesic(axis(p), ax, 1e-7)) p = p.inverse();

  // tiles met by one period of the axis; the foot of any seam lies within rho + step of one of them
  const double step = 0.05;
  std::vector<GroupElement> tiles;
  TolerantIndex tidx;
  int ns = static_cast<int>(std::ceil(lp / step));
  for (int k = 0; k <= ns; ++k)
    for (double eta : {-kOffset, kOffset}) {
      GroupElement c = fold_point(G, offset_point(ax, s0 + lp * k / ns, eta)).c.inverse();
      int id = static_cast<int>(tiles.size());
      if (tidx.insert(c, id) == id) tiles.push_back(c);
    }
  std::sort(tiles.begin(), tiles.end(), key_less);
  P.tiles = static_cast<int>(tiles.size());
  P.ball_radius = axis_ball_radius(hi2, rho + step + P.M_plus) + 1e-9;
  BallOptions bo;
  bo.cap = opt.cap;
  bo.parallel = opt.parallel;
  Ball BH = ball(G, P.ball_radius, bo);
  std::vector<GroupElement> shell;
  for (const auto& h : BH.elements) {
    if (!hyperbolic(h)) continue;
    double len = tr_length(h);
    if (len > lo2 && len < hi2) shell.push_back(h);
  }

  const long nt = static_cast<long>(tiles.size());
  std::vector<std::vector<PantsHit>> found(static_cast<size_t>(nt));
  auto body = [&](long i) {
    const GroupElement& c = tiles[static_cast<size_t>(i)];
    GroupElement ci = c.inverse();
    for (const auto& hp : shell) {
      GroupElement h = c * hp * ci;
      PantsHit hit;
      try {
        if (axis_distance(g, h) > P.M_plus + 1e-9) continue;
        hit.pp = pants_from_pair(g, h);
      } catch (const GeometryError&) {
        continue;
      }
      if (!(hit.pp.l3 > r3 * L - eps && hit.pp.l3 < r3 * L + eps)) continue;
      hit.foot = axis_coordinate(ax, hit.pp.foot1) - s0;
      if (hit.foot < -1e-9 || hit.foot > lp + 1e-9) continue;
      hit.h_ind = hit.pp.second();
      hit.k_ind = hit.pp.third.inverse();
      found[static_cast<size_t>(i)].push_back(hit);
    }
  };
  if (opt.parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < nt; ++i) body(i);
  } else {
    for (long i = 0; i < nt; ++i) body(i);
  }

  TolerantIndex idx;
  GroupElement pi = p.inverse();
  auto lookup = [&](const GroupElement& h) {
    for (const GroupElement& x : {h, p * h * pi, pi * h * p}) {
      int j = idx.find(x);
      if (j >= 0) return j;
    }
    return -1;
  };
  std::vector<PantsHit> uniq;
  for (auto& list : found)
    for (auto& hit : list) {
      if (lookup(hit.h_ind) >= 0) continue;
      idx.insert(hit.h_ind, static_cast<int>(uniq.size()));
      uniq.push_back(hit);
    }
  std::vector<size_t> order(uniq.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](size_t x, size_t y) {
    auto lx = std::llround(uniq[x].pp.l2 * 1e9), ly = std::llround(uniq[y].pp.l2 * 1e9);
    if (lx != ly) return lx < ly;
    return key_less(uniq[x].h_ind, uniq[y].h_ind);
  });
  std::vector<int> rank(uniq.size());
  for (size_t k = 0; k < order.size(); ++k) rank[order[k]] = static_cast<int>(k);
  UnionFind uf(uniq.size());
  for (size_t k = 0; k < uniq.size(); ++k) {
    int j = lookup(uniq[k].k_ind);
    if (j >= 0) uf.unite(rank[k], rank[static_cast<size_t>(j)]);
  }
  std::vector<int> comp(uniq.size(), -1);
  for (size_t k = 0; k < order.size(); ++k) {
    PantsHit hit = uniq[order[k]];
    int r = uf.find(static_cast<int>(k));
    if (comp[static_cast<size_t>(r)] < 0) comp[static_cast<size_t>(r)] = P.pants_count++;
    hit.pants_id = comp[static_cast<size_t>(r)];
    P.pairs.push_back(hit);
  }
  return P;
}

Clothesline clothesline_search(const SurfaceGroup& G, const Census& C, int from, int to, double L,
                               double eps, int n_max, const PantsCensusOptions& opt) {
  if (n_max < 1 || n_max > 3) fail(Fault::BadParameters, "n_max must be in 1..3");
  int nc = static_cast<int>(C.classes.size());
  if (from < 0 || from >= nc || to < 0 || to >= nc) fail(Fault::BadParameters, "class id out of range");
  Clothesline out;
  if (from == to) {
    out.found = true;
    out.geodesics = {from};
    return out;
  }
  std::vector<int> parent(static_cast<size_t>(nc), -2), depth(static_cast<size_t>(nc), 0);
  std::vector<PantsHit> via(static_cast<size_t>(nc));
  parent[static_cast<size_t>(from)] = -1;
  depth[static_cast<size_t>(from)] = 1;
  std::queue<int> q;
  q.push(from);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    if (depth[static_cast<size_t>(u)] >= n_max) continue;
    ++out.explored;
    PantsCensus P = pants_census(G, C.classes[static_cast<size_t>(u)], 1, 1, 1, L, eps, opt);
    for (const auto& hit : P.pairs)
      for (const GroupElement& e : {hit.h_ind.inverse(), hit.k_ind.inverse()}) {
        int v = C.class_of(G, e);
        if (v < 0 || parent[static_cast<size_t>(v)] != -2) continue;
        parent[static_cast<size_t>(v)] = u;
        via[static_cast<size_t>(v)] = hit;
        depth[static_cast<size_t>(v)] = depth[static_cast<size_t>(u)] + 1;
        if (v == to) {
          std::vector<int> path;
          std::vector<PantsHit> pants;
          for (int x = v; x != -1; x = parent[static_cast<size_t>(x)]) {
            path.push_back(x);
            if (parent[static_cast<size_t>(x)] != -1) pants.push_back(via[static_cast<size_t>(x)]);
          }
          std::reverse(path.begin(), path.end());
          std::reverse(pants.begin(), pants.end());
          out.found = true;
          out.geodesics = path;
          out.pants = pants;
          return out;
        }
        q.push(v);
      }
  }
  return out;
}

}  // namespace hyp
