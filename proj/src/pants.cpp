#include "hyp/pants.hpp"

#include <cmath>
#include <limits>

#include "hyp/hexagon.hpp"

namespace hyp {

namespace {

void require_hyperbolic(const GroupElement& g, const char* what) {
  if (!g.is_real()) fail(Fault::ComplexElement, std::string(what) + " is not real");
  if (classify(g) != Kind::Hyperbolic) fail(Fault::BadParameters, std::string(what) + " is not hyperbolic");
}

double reduce_mod(double t, double period) {
  double r = std::fmod(t, period);
  if (r < 0) r += period;
  if (period - r <= 1e-12 * (1 + period)) r = 0;
  return r;
}

bool near(double x, double y) { return std::abs(x - y) <= 1e-12 * (1 + std::abs(x) + std::abs(y)); }

}  // namespace

double pants_rhs(double l1, double l2, double M) {
  return std::sinh(l1 / 2) * std::sinh(l2 / 2) * std::cosh(M) -
         std::cosh(l1 / 2) * std::cosh(l2 / 2);
}

double axis_distance(const GroupElement& g1, const GroupElement& g2) {
  OrientedGeodesic s = axis(g1), t = to_standard_axis(s) * axis(g2);
  if (t.tail.inf || t.head.inf) fail(Fault::IntersectingAxes, "axes share an endpoint");
  double p = t.tail.z.real(), q = t.head.z.real();
  if (p == 0 || q == 0) fail(Fault::IntersectingAxes, "axes share an endpoint");
  if (p * q < 0) fail(Fault::IntersectingAxes, "axes cross");
  double ch = std::abs(p + q) / std::abs(q - p);
  if (!(ch > 1)) fail(Fault::IntersectingAxes, "axes are not disjoint");
  return std::acosh(ch);
}

PantsPair pants_from_pair(const GroupElement& g1, const GroupElement& g2) {
  require_hyperbolic(g1, "g1");
  require_hyperbolic(g2, "g2");
  PantsPair pp;
  pp.g1 = g1;
  pp.g2 = g2;
  pp.M = axis_distance(g1, g2);
  pp.l1 = displacement(g1).re();
  pp.l2 = displacement(g2).re();
  pp.rhs = pants_rhs(pp.l1, pp.l2, pp.M);
  if (!(pp.rhs >= 1)) fail(Fault::NoPantsSolution, "no l3 >= 0 satisfies the identity");
  pp.l3 = 2 * std::acosh(pp.rhs);

  GroupElement w[2] = {g1 * g2, g1 * g2.inverse()};
  double res[2];
  for (int k = 0; k < 2; ++k)
    res[k] = std::abs(std::abs(w[k].trace().real()) / 2 - pp.rhs) / std::max(1.0, pp.rhs);
  int k = res[0] <= res[1] ? 0 : 1;
  pp.product_word = k == 0;
  pp.third = w[k];
  pp.word_residual = res[k];
  pp.other_residual = res[1 - k];

  OrientedGeodesic a1 = axis(g1), a2 = axis(g2);
  OrientedGeodesic perp = common_perpendicular(a1, a2);
  if (!intersect(a1, perp, pp.foot1) || !intersect(a2, perp, pp.foot2))
    fail(Fault::IntersectingAxes, "common perpendicular misses an axis");
  return pp;
}

TriangleCase triangle_case(double r1, double r2, double r3) {
  if (!(r1 > 0 && r2 > 0 && r3 > 0)) fail(Fault::BadParameters, "r must be positive");
  if (near(r1 + r2, r3)) return TriangleCase::Sum;
  if (r3 > r1 + r2) return TriangleCase::Beyond;
  if (r1 < r2 + r3 && r2 < r1 + r3 && r3 < r1 + r2 && !near(r1, r2 + r3) && !near(r2, r1 + r3))
    return TriangleCase::Triangle;
  fail(Fault::CaseGap, "r1, r2, r3 fall outside the three cases");
}

double m_schedule(double r1, double r2, double r3, double L, double x, double l1) {
  switch (triangle_case(r1, r2, r3)) {
    case TriangleCase::Triangle: return 2 * std::exp((-l1 - r2 * L + r3 * L + x) / 4);
    case TriangleCase::Sum: return std::acosh(2 * std::exp(x / 2) + 1);
    case TriangleCase::Beyond: return (-l1 - r2 * L + r3 * L + x) / 2 + std::log(4.0);
  }
  return 0;
}

double mtilde(double r1, double r2, double r3, double L) {
  switch (triangle_case(r1, r2, r3)) {
    case TriangleCase::Triangle: return std::exp((-r1 - r2 + r3) * L / 4);
    case TriangleCase::Sum: return 1;
    case TriangleCase::Beyond: return (-r1 - r2 + r3) * L / 2;
  }
  return 0;
}

std::array<cplx, 2> twist_feet(const PantsPair& pp) { return {pp.foot1, pp.foot2}; }

double twist_parameter(const PantsPair& pp1, const PantsPair& pp2) {
  OrientedGeodesic s = axis(pp1.g1), t = axis(pp2.g1);
  bool same = same_geodesic(s, t, 1e-9) || same_geodesic(s, t.reverse(), 1e-9);
  if (!same || std::abs(pp1.l1 - pp2.l1) > 1e-9)
    fail(Fault::BoundaryMismatch, "pants do not share the boundary geodesic");
  double d = axis_coordinate(s, pp2.foot1) - axis_coordinate(s, pp1.foot1);
  return reduce_mod(d, pp1.l1 / 2);
}

BoxX make_box(std::array<double, 3> lo, std::array<double, 3> hi) {
  for (int k = 0; k < 3; ++k) {
    if (!std::isfinite(lo[k]) || !std::isfinite(hi[k])) fail(Fault::UnboundedBox, "box must be bounded");
    if (!(lo[k] < hi[k])) fail(Fault::BadParameters, "box intervals must be nonempty");
  }
  return {lo, hi};
}

BoxX b_epsilon(double eps) {
  if (!(eps > 0)) fail(Fault::BadParameters, "eps must be positive");
  return make_box({-eps, -eps, -eps}, {eps, eps, eps});
}

BoxX bx_box(double x, double eps) {
  if (!(eps > 0) || !(std::abs(x) < eps)) fail(Fault::BadParameters, "need |x| < eps");
  return make_box({-1, -1, std::max(-eps - 2 * x, -eps)}, {1, 1, std::min(eps - 2 * x, eps)});
}

double bx_volume(double x, double eps) {
  if (!(eps > 0) || !(std::abs(x) < eps)) fail(Fault::BadParameters, "need |x| < eps");
  return 8 * std::exp(-x) * std::sinh(eps - std::abs(x));
}

std::array<double, 3> F_coords(const GroupElement& g) {
  if (!g.is_real()) fail(Fault::ComplexElement, "F needs a real element");
  double s = g.a().real() < 0 ? -1 : 1;
  return F_map(s * g.a().real(), s * g.b().real(), s * g.c().real());
}

bool b_membership(const GroupElement& g, const BoxX& X) {
  if (!g.is_real()) fail(Fault::ComplexElement, "membership needs a real element");
  if (g.a().real() == 0) return false;
  auto F = F_coords(g);
  for (int k = 0; k < 3; ++k)
    if (F[k] < X.lo[k] || F[k] > X.hi[k]) return false;
  return true;
}

double b_volume(const BoxX& X) {
  for (int k = 0; k < 3; ++k)
    if (!std::isfinite(X.lo[k]) || !std::isfinite(X.hi[k])) fail(Fault::UnboundedBox, "box must be bounded");
  return (X.hi[0] - X.lo[0]) * (X.hi[1] - X.lo[1]) * (std::exp(X.hi[2]) - std::exp(X.lo[2]));
}

double vol_t1(int genus) {
  if (genus < 2) fail(Fault::BadParameters, "genus must be at least 2");
  return 4 * kPi * kPi * (2 * genus - 2);
}

int isom_order(double r1, double r2, double r3) {
  int eq = near(r1, r2) + near(r2, r3) + near(r1, r3);
  if (eq == 3) return 6;
  return eq >= 1 ? 2 : 1;
}

const char* formula_name(Formula f) {
  switch (f) {
    case Formula::Geodesics: return "geodesics";
    case Formula::PantsGivenGamma: return "pants_given_gamma";
    case Formula::PantsAll: return "pants_all";
    case Formula::Angle: return "angle";
    case Formula::TwistWindow: return "twist_window";
  }
  return "?";
}

Formula formula_from_name(const std::string& s) {
  for (Formula f : {Formula::Geodesics, Formula::PantsGivenGamma, Formula::PantsAll, Formula::Angle,
                    Formula::TwistWindow})
    if (s == formula_name(f)) return f;
  fail(Fault::BadParameters, "unknown formula " + s);
}

double predicted_counts(Formula f, const CountParams& p) {
  auto pos = [](double v, const char* what) {
    if (!(v > 0)) fail(Fault::BadParameters, std::string(what) + " must be positive");
  };
  double vol = vol_t1(p.genus);
  double q = std::exp(p.eps / 2) - std::exp(-p.eps / 2);
  switch (f) {
    case Formula::Geodesics:
      pos(p.L, "L");
      if (!(p.l2 > p.l1)) fail(Fault::BadParameters, "need l1 < l2");
      return (std::exp(p.l2) - std::exp(p.l1)) / p.L * std::exp(p.L);
    case Formula::PantsGivenGamma: {
      pos(p.eps, "eps");
      pos(p.r1, "r1");
      pos(p.r2, "r2");
      pos(p.r3, "r3");
      pos(p.gamma_length, "gamma length");
      pos(p.gamma_primitive_length, "primitive length");
      if (!(p.r2 + p.r3 > p.r1) || !(p.r1 + p.r3 > p.r2))
        fail(Fault::BadParameters, "need r2 + r3 > r1 and r1 + r3 > r2");
      int n = near(p.r2, p.r3) ? 2 : 1;
      return 4 * q * q / (vol * n) * p.gamma_primitive_length *
             std::exp(-p.gamma_length / 2 + p.r2 * p.L / 2 + p.r3 * p.L / 2);
    }
    case Formula::PantsAll:
      pos(p.eps, "eps");
      pos(p.r1, "r1");
      pos(p.r2, "r2");
      pos(p.r3, "r3");
      return 8 * q * q * q / (vol * isom_order(p.r1, p.r2, p.r3)) *
             std::exp((p.r1 + p.r2 + p.r3) * p.L / 2);
    case Formula::Angle:
      pos(p.sigma_length, "sigma length");
      if (!(p.a2 > p.a1) || !(p.l2 > p.l1)) fail(Fault::BadParameters, "need a1 < a2 and l1 < l2");
      return p.sigma_length / vol * (p.a2 - p.a1) * (std::exp(p.l2) - std::exp(p.l1)) *
             std::exp(p.L / 2);
    case Formula::TwistWindow:
      pos(p.gamma_primitive_length, "primitive length");
      if (p.interval_length < 0 || p.pants_given_gamma < 0)
        fail(Fault::BadParameters, "interval length and count must be nonnegative");
      return p.interval_length * p.pants_given_gamma / p.gamma_primitive_length;
  }
  return 0;
}

}  // namespace hyp
