#include <cmath>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "hyp/hexagon.hpp"
#include "hyp/stats.hpp"

using namespace hyp;

// Measures error / budget-shape ratios on an independent draw set and stores
// ten times the largest one.
int main(int argc, char** argv) {
  std::string out = argc > 1 ? argv[1] : "";
  Rng rng(20240601);
  const double M = 1;
  double worst[8] = {0};
  const char* names[8] = {"translation", "perp_foot", "perp_angle", "parallel_perp",
                          "parallel_foot", "asym_H4", "asym_H5", "asym_H5_paper"};
  for (double L : {6.0, 8.0, 10.0, 12.0}) {
    for (int k = 0; k < 250; ++k) {
      auto [a, b, c, d] = draw_bounded(rng, 1.0);
      double B = B_bound(a, b, c, d);
      PerpReport pr = perp_report(a, b, c, d, L);
      ParallelReport par = parallel_report(a, b, c, d, L, M);
      HexParams p = make_params(a, b, c, L, std::exp(L / 2), M);
      HexagonH hx = build_hexagon(p);
      ExactWidths ew = exact_widths(p, &hx);
      AsymptoticWidths as = asymptotic_widths(p, &hx);
      double e4 = strip_distance(ew.H4.value(), as.H4s.value());
      double e5 = strip_distance(ew.H5.value(), as.H5s.value());
      double r[8] = {
          std::abs(pr.length_exact - pr.length) / pr.length_budget,
          std::abs(pr.foot_exact - pr.foot) / pr.foot_budget,
          std::abs(pr.angle_exact - pr.angle) / pr.angle_budget,
          std::abs(par.perp_exact - par.perp_length) / par.perp_budget,
          std::abs(par.foot_exact - par.foot_shift) / par.foot_budget_observed,
          e4 / as.budget4,
          e5 / (as.budget4 / std::sinh(M)),
          e5 / as.budget5};
      for (int i = 0; i < 8; ++i) worst[i] = std::max(worst[i], r[i]);
    }
  }
  nlohmann::json j;
  for (int i = 0; i < 8; ++i) {
    j["measured"][names[i]] = worst[i];
    j["constant"][names[i]] = 10 * worst[i];
  }
  j["draws"] = "B <= 1, L in {6,8,10,12}, 250 each, M = 1, seed 20240601";
  std::string text = j.dump(2) + "\n";
  if (out.empty()) std::cout << text;
  else std::ofstream(out) << text;
}
