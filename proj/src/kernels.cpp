#include "hyp/kernels.hpp"

#include <cmath>

#include <omp.h>

namespace hyp {

std::vector<Child> expand_frontier(const std::vector<GroupElement>& frontier,
                                   const std::vector<GroupElement>& letters, double limit,
                                   bool parallel) {
  const long nf = static_cast<long>(frontier.size());
  const long nl = static_cast<long>(letters.size());
  std::vector<Child> out(static_cast<size_t>(nf * nl));
  auto body = [&](long i) {
    for (long k = 0; k < nl; ++k) {
      Child& c = out[static_cast<size_t>(i * nl + k)];
      c.g = frontier[static_cast<size_t>(i)] * letters[static_cast<size_t>(k)];
      c.disp = base_displacement(c.g);
      c.keep = c.disp <= limit;
    }
  };
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (long i = 0; i < nf; ++i) body(i);
  } else {
    for (long i = 0; i < nf; ++i) body(i);
  }
  return out;
}

double haar_quadrature(const BoxX& X, int n, bool parallel) {
  if (n < 2) fail(Fault::BadParameters, "grid too coarse");
  b_volume(X);
  double a0 = std::exp(X.lo[2] / 2), a1 = std::exp(X.hi[2] / 2);
  // c - b in a I1, c + b in a I2
  double bl = (X.lo[1] - X.hi[0]) / 2, bh = (X.hi[1] - X.lo[0]) / 2;
  double cl = (X.lo[0] + X.lo[1]) / 2, ch = (X.hi[0] + X.hi[1]) / 2;
  double da = (a1 - a0) / n;
  std::vector<double> slice(static_cast<size_t>(n), 0.0);
  auto body = [&](int i) {
    double a = a0 + (i + 0.5) * da;
    double db = a * (bh - bl) / n, dc = a * (ch - cl) / n;
    long hits = 0;
    for (int j = 0; j < n; ++j) {
      double b = a * bl + (j + 0.5) * db;
      for (int k = 0; k < n; ++k) {
        double c = a * cl + (k + 0.5) * dc;
        if (b_membership(Mat(a, b, c, (1 + b * c) / a), X)) ++hits;
      }
    }
    slice[static_cast<size_t>(i)] = static_cast<double>(hits) * da * db * dc / a;
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) body(i);
  } else {
    for (int i = 0; i < n; ++i) body(i);
  }
  double s = 0;
  for (double v : slice) s += v;
  return s;
}

std::vector<ScanHit> scan_times(const Frame& w, double L, const std::vector<double>& ts,
                                const std::vector<GroupElement>& cands, const BoxX& X,
                                bool parallel) {
  const long nt = static_cast<long>(ts.size());
  std::vector<std::vector<int>> found(static_cast<size_t>(nt));
  GroupElement gp = G(L / 2), gm = G(-L / 2);
  auto body = [&](long i) {
    Frame wt = push_right(w, ts[static_cast<size_t>(i)]);
    GroupElement Ainv = (wt * gp).inverse(), B = wt * gm;
    for (size_t k = 0; k < cands.size(); ++k)
      if (b_membership(Ainv * cands[k] * B, X)) found[static_cast<size_t>(i)].push_back(static_cast<int>(k));
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < nt; ++i) body(i);
  } else {
    for (long i = 0; i < nt; ++i) body(i);
  }
  std::vector<ScanHit> out;
  for (long i = 0; i < nt; ++i)
    for (int k : found[static_cast<size_t>(i)]) out.push_back({static_cast<int>(i), k});
  return out;
}

}  // namespace hyp
