#include "hyp/equi.hpp"

#include <cmath>
#include <numeric>

namespace hyp {

namespace {

const cplx kI(0, 1);

int sector(double angle, int n) {
  double u = angle / (2 * kPi);
  u -= std::floor(u);
  int s = static_cast<int>(std::floor(u * n));
  return s >= n ? n - 1 : s;
}

void check_bins(int spatial, int angular) {
  if (!(spatial == 1 || spatial == 2 || spatial == 4 || spatial == 8))
    fail(Fault::BadParameters, "spatial cells must divide 8");
  if (angular < 1) fail(Fault::BadParameters, "need at least one angle sector");
}

// frame along the axis at arclength coordinate t
Frame axis_frame(const OrientedGeodesic& ax, double t) {
  return to_standard_axis(ax).inverse() * G(t);
}

}  // namespace

EmpiricalMeasure::EmpiricalMeasure(int s, int a) : spatial(s), angular(a) {
  check_bins(s, a);
  mass.assign(static_cast<std::size_t>(s * a), 0.0);
}

void EmpiricalMeasure::add(int bin, double w) { mass.at(static_cast<std::size_t>(bin)) += w; }

double EmpiricalMeasure::total() const { return std::accumulate(mass.begin(), mass.end(), 0.0); }

void EmpiricalMeasure::normalize() {
  double s = total();
  if (!(s > 0)) fail(Fault::BadParameters, "empty measure");
  for (double& m : mass) m /= s;
}

int frame_bin(const SurfaceGroup& G, const Frame& w, int spatial, int angular) {
  Fold f = fold_point(G, basepoint(w));
  Frame v = f.c * w;
  cplx z = basepoint(v);
  double pos = std::arg((z - kI) / (z + kI));
  double dir = direction_angle(v) + std::arg(2.0 * kI / ((z + kI) * (z + kI)));
  return sector(pos, spatial) * angular + sector(dir, angular);
}

double tv_uniform(const EmpiricalMeasure& m) {
  double u = 1.0 / m.bins(), s = 0;
  for (double x : m.mass) s += std::abs(x - u);
  return 0.5 * s;
}

EmpiricalMeasure uniform_measure(int spatial, int angular) {
  EmpiricalMeasure m(spatial, angular);
  for (double& x : m.mass) x = 1.0 / m.bins();
  return m;
}

EmpiricalMeasure point_mass(const SurfaceGroup& G, const Frame& w, int spatial, int angular) {
  EmpiricalMeasure m(spatial, angular);
  m.add(frame_bin(G, w, spatial, angular), 1.0);
  return m;
}

EmpiricalMeasure nu_classes(const SurfaceGroup& G, const Census& C, const std::vector<int>& ids,
                            double step, int spatial, int angular) {
  if (!(step > 0)) fail(Fault::BadParameters, "step must be positive");
  EmpiricalMeasure m(spatial, angular);
  for (int id : ids) {
    const GeodesicClass& g = C.classes.at(static_cast<std::size_t>(id));
    OrientedGeodesic ax = axis(g.rep);
    int n = std::max(1, static_cast<int>(std::ceil(g.length / step)));
    double ds = g.length / n, t0 = axis_coordinate(ax, kI);
    for (int k = 0; k < n; ++k)
      m.add(frame_bin(G, axis_frame(ax, t0 + (k + 0.5) * ds), spatial, angular), ds);
  }
  m.normalize();
  return m;
}

EmpiricalMeasure nu_L(const SurfaceGroup& G, const Census& C, double step, int spatial,
                      int angular) {
  std::vector<int> ids(C.classes.size());
  std::iota(ids.begin(), ids.end(), 0);
  return nu_classes(G, C, ids, step, spatial, angular);
}

PairMeasure mu_pairs(const SurfaceGroup& G, const Frame& w, double T, double L, int samples,
                     int spatial, int angular, bool parallel) {
  check_bins(spatial, angular);
  if (!(T > 0) || samples < 1) fail(Fault::BadParameters, "need T > 0 and samples >= 1");
  PairMeasure r;
  r.k = spatial * angular;
  r.mass.assign(static_cast<std::size_t>(r.k * r.k), 0.0);
  std::vector<int> slot(static_cast<std::size_t>(samples));
  auto one = [&](int i) {
    Frame wt = push_right(w, T * (i + 0.5) / samples);
    int b1 = frame_bin(G, wt * hyp::G(-L / 2), spatial, angular);
    int b2 = frame_bin(G, wt * hyp::G(L / 2), spatial, angular);
    slot[static_cast<std::size_t>(i)] = b1 * r.k + b2;
  };
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < samples; ++i) one(i);
  } else {
    for (int i = 0; i < samples; ++i) one(i);
  }
  for (int b : slot) r.mass[static_cast<std::size_t>(b)] += 1.0 / samples;
  double u = 1.0 / (static_cast<double>(r.k) * r.k), s = 0;
  for (double x : r.mass) s += std::abs(x - u);
  r.tv = 0.5 * s;
  return r;
}

AngleCount angle_count(const SurfaceGroup& G, const Census& C, const Frame& w,
                       double sigma_length, double a1, double a2) {
  if (!(sigma_length > 0) || !(a2 > a1)) fail(Fault::BadParameters, "need length > 0, a1 < a2");
  cplx p = basepoint(w);
  if (hdist(p, kI) + sigma_length > G.covering_radius)
    fail(Fault::BadParameters, "segment must stay within the covering radius of i");
  OrientedGeodesic sigma(w.apply(BoundaryPoint(0.0)), w.apply(BoundaryPoint::infinity()));
  GroupElement B = to_standard_axis(sigma);
  double s0 = axis_coordinate(sigma, p);
  double scale = std::exp(-C.L / 2);
  AngleCount r;
  for (const GroupElement& h : C.candidates) {
    OrientedGeodesic ax = axis(h);
    cplx z;
    if (!intersect(sigma, ax, z)) continue;
    double s = axis_coordinate(sigma, z);
    if (s < s0 || s > s0 + sigma_length) continue;
    ++r.crossings;
    double phi_s = direction_angle(B.inverse() * hyp::G(s));
    double phi_v = direction_angle(axis_frame(ax, axis_coordinate(ax, z)));
    double theta = std::remainder(phi_s - phi_v - kPi / 2, 2 * kPi);
    if (theta > a1 * scale && theta < a2 * scale) ++r.hits;
  }
  CountParams cp;
  cp.genus = G.genus;
  cp.L = C.L;
  cp.l1 = C.l1;
  cp.l2 = C.l2;
  cp.sigma_length = sigma_length;
  cp.a1 = a1;
  cp.a2 = a2;
  r.predicted = predicted_counts(Formula::Angle, cp);
  return r;
}

}  // namespace hyp
