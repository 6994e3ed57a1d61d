#pragma once

#include <vector>

#include "hyp/moebius.hpp"
#include "hyp/pants.hpp"

namespace hyp {

// Each kernel has a serial reference (parallel = false) and an OpenMP version.
// Results are written to per-index slots and merged in index order, so both
// paths return identical output.

struct Child {
  GroupElement g;
  double disp = 0;  // d(g i, i)
  bool keep = false;
};
// children f * s for every frontier element f and letter s, slot f_index * letters + s_index
std::vector<Child> expand_frontier(const std::vector<GroupElement>& frontier,
                                   const std::vector<GroupElement>& letters, double limit,
                                   bool parallel);

// integral of da db dc / a over {F(a,b,c) in X}, midpoint grid with n cells per axis
double haar_quadrature(const BoxX& X, int n, bool parallel);

struct ScanHit {
  int t_index = 0;
  int g_index = 0;
};
// (w_t G_{L/2})^-1 g (w_t G_{-L/2}) in B_X for w_t = push_right(w, t)
std::vector<ScanHit> scan_times(const Frame& w, double L, const std::vector<double>& ts,
                                const std::vector<GroupElement>& cands, const BoxX& X,
                                bool parallel);

}  // namespace hyp
