#include "hyp/stats.hpp"

#include <cmath>

#include "hyp/errors.hpp"

namespace hyp {

std::array<double, 4> draw_bounded(Rng& r, double B) {
  if (!(B > 0)) fail(Fault::BadParameters, "B must be positive");
  for (;;) {
    double a = std::exp(r.uniform(-B, B)), b = r.uniform(-B, B), c = r.uniform(-B, B);
    double d = (1 + b * c) / a;
    if (std::abs(d - 1) <= B) return {a, b, c, d};
  }
}

Fit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) fail(Fault::BadParameters, "need two or more points");
  double n = static_cast<double>(x.size()), sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  double mx = sx / n, my = sy / n, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (!(sxx > 0)) fail(Fault::BadParameters, "abscissae coincide");
  Fit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  return f;
}

}  // namespace hyp
