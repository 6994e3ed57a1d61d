#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

namespace hyp {

// mt19937_64 with uniforms built from the top 53 bits, so draws match across
// standard libraries (std::uniform_real_distribution does not)
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : e_(seed) {}
  double uniform() { return static_cast<double>(e_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::uint64_t bits() { return e_(); }

 private:
  std::mt19937_64 e_;
};

// (a, b, c, d) with ad - bc = 1 and max(|ln a|, |b|, |c|, |d - 1|) <= B, by rejection
std::array<double, 4> draw_bounded(Rng& r, double B);

struct Fit {
  double slope = 0, intercept = 0;
};
// least squares y = slope x + intercept
Fit fit_line(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace hyp
