#pragma once

#include <vector>

#include "hyp/fuchsian.hpp"

namespace hyp {

// Bins on the unit tangent bundle of the surface. A frame is folded to the
// octagon at i, then binned by the disk argument of its basepoint (spatial
// sectors) and the disk direction of its vector (angle sectors).
struct EmpiricalMeasure {
  int spatial = 8, angular = 8;
  std::vector<double> mass;

  EmpiricalMeasure(int spatial = 8, int angular = 8);
  int bins() const { return spatial * angular; }
  void add(int bin, double w);
  void normalize();  // throws BadParameters on zero total mass
  double total() const;
};

int frame_bin(const SurfaceGroup& G, const Frame& w, int spatial, int angular);

// total variation to the uniform bin measure, in [0, 1 - 1/K]
double tv_uniform(const EmpiricalMeasure& m);
EmpiricalMeasure uniform_measure(int spatial = 8, int angular = 8);
EmpiricalMeasure point_mass(const SurfaceGroup& G, const Frame& w, int spatial = 8,
                            int angular = 8);

// length measure of the listed classes, sampled every step along one period
EmpiricalMeasure nu_classes(const SurfaceGroup& G, const Census& C, const std::vector<int>& ids,
                            double step = 0.05, int spatial = 8, int angular = 8);
EmpiricalMeasure nu_L(const SurfaceGroup& G, const Census& C, double step = 0.05, int spatial = 8,
                      int angular = 8);

// pushforward of t -> (w_t G_{-L/2}, w_t G_{L/2}), t in [0, T], on the product of bins
struct PairMeasure {
  int k = 64;
  std::vector<double> mass;  // k * k
  double tv = 0;             // to the uniform product
};
PairMeasure mu_pairs(const SurfaceGroup& G, const Frame& w, double T, double L, int samples,
                     int spatial = 8, int angular = 8, bool parallel = true);

// unit vectors on the segment from basepoint(w) in the direction of w, tangent to census
// geodesics, with angle to the segment in pi/2 + (a1, a2) e^{-L/2}
struct AngleCount {
  int crossings = 0;  // all oriented crossings of the segment
  int hits = 0;       // inside the angle window
  double predicted = 0;
};
AngleCount angle_count(const SurfaceGroup& G, const Census& C, const Frame& w,
                       double sigma_length, double a1, double a2);

}  // namespace hyp
