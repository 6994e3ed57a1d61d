#include "hyp/geodesy.hpp"

#include "hyp/generic.hpp"

#include <cmath>

namespace hyp {

OrientedGeodesic::OrientedGeodesic(BoundaryPoint u, BoundaryPoint v) : tail(u), head(v) {
  if (same_point(u, v, 1e-14)) fail(Fault::BadParameters, "geodesic endpoints coincide");
}

OrientedGeodesic operator*(const GroupElement& g, const OrientedGeodesic& s) {
  return {g.apply(s.tail), g.apply(s.head)};
}

bool same_geodesic(const OrientedGeodesic& s, const OrientedGeodesic& t, double tol) {
  return same_point(s.tail, t.tail, tol) && same_point(s.head, t.head, tol);
}

OrientedGeodesic axis(const GroupElement& g) {
  auto [e0, e1] = fixed_points(g);
  return {e0, e1};
}

namespace {

generic::Point<double> gp(const BoundaryPoint& p) { return {p.z, p.inf}; }
BoundaryPoint bp(const generic::Point<double>& p) {
  return p.inf ? BoundaryPoint::infinity() : BoundaryPoint(p.z);
}
generic::Geo<double> gg(const OrientedGeodesic& s) { return {gp(s.tail), gp(s.head)}; }

}  // namespace

cplx cross_ratio(const BoundaryPoint& a, const BoundaryPoint& b, const BoundaryPoint& c,
                 const BoundaryPoint& d) {
  return generic::cross_ratio<double>(gp(a), gp(b), gp(c), gp(d));
}

GroupElement half_turn(const OrientedGeodesic& s) {
  auto m = generic::half_turn<double>(gg(s));
  return GroupElement::normalize(m[0], m[1], m[2], m[3]);
}

OrientedGeodesic common_perpendicular(const OrientedGeodesic& s1, const OrientedGeodesic& s2) {
  auto p = generic::common_perpendicular<double>(gg(s1), gg(s2));
  return {bp(p.tail), bp(p.head)};
}

double orthogonality_defect(const OrientedGeodesic& s, const OrientedGeodesic& t) {
  return generic::orthogonality_defect<double>(gg(s), gg(t));
}

Width double_cross_width(const OrientedGeodesic& s1, const OrientedGeodesic& s2,
                         const OrientedGeodesic& s3) {
  if (orthogonality_defect(s1, s3) > 1e-8 || orthogonality_defect(s2, s3) > 1e-8)
    fail(Fault::NotOrthogonal, "third geodesic is not a common perpendicular");
  return Width(generic::raw_width<double>(gg(s1), gg(s2), gg(s3)));
}

Width width_unsigned(const OrientedGeodesic& s1, const OrientedGeodesic& s2) {
  cplx r = cross_ratio(s1.tail, s1.head, s2.tail, s2.head);
  if (std::abs(1.0 - r) <= 1e-14) fail(Fault::DegenerateQuadruple, "shared endpoint");
  cplx mu = 2.0 * std::atanh(std::sqrt(r));
  cplx w = reduce_strip(mu);
  if (w.real() < -1e-13 || (std::abs(w.real()) <= 1e-13 && w.imag() < 0)) w = reduce_strip(-mu);
  return Width(w);
}

GroupElement to_standard_axis(const OrientedGeodesic& s) {
  if (s.tail.inf) return GroupElement::normalize(0.0, -1.0, 1.0, -s.head.z.real());
  if (s.head.inf) return GroupElement::normalize(1.0, -s.tail.z.real(), 0.0, 1.0);
  double t = s.tail.z.real(), h = s.head.z.real();
  if (t > h) return GroupElement::normalize(1.0, -t, 1.0, -h);
  return GroupElement::normalize(-1.0, t, 1.0, -h);
}

double axis_coordinate(const OrientedGeodesic& s, cplx z) {
  return std::log(std::abs(to_standard_axis(s).act(z)));
}

cplx point_at(const OrientedGeodesic& s, double t) {
  return to_standard_axis(s).inverse().act(cplx(0, std::exp(t)));
}

cplx offset_point(const OrientedGeodesic& s, double t, double eta) {
  cplx w = std::exp(t) * cplx(std::sinh(eta), 1.0) / std::cosh(eta);
  return to_standard_axis(s).inverse().act(w);
}

double distance_to_geodesic(const OrientedGeodesic& s, cplx z) {
  cplx w = to_standard_axis(s).act(z);
  return std::asinh(std::abs(w.real()) / w.imag());
}

bool intersect(const OrientedGeodesic& s, const OrientedGeodesic& t, cplx& z) {
  GroupElement h = to_standard_axis(s);
  OrientedGeodesic u = h * t;
  if (u.tail.inf || u.head.inf) return false;
  double p = u.tail.z.real(), q = u.head.z.real();
  if (!(p * q < 0)) return false;
  z = h.inverse().act(cplx(0, std::sqrt(-p * q)));
  return true;
}

}  // namespace hyp
