#pragma once

#include "hyp/moebius.hpp"

namespace hyp {

struct OrientedGeodesic {
  BoundaryPoint tail;
  BoundaryPoint head;

  OrientedGeodesic() = default;
  OrientedGeodesic(BoundaryPoint u, BoundaryPoint v);
  OrientedGeodesic reverse() const { return {head, tail}; }
};

OrientedGeodesic operator*(const GroupElement& g, const OrientedGeodesic& s);
bool same_geodesic(const OrientedGeodesic& s, const OrientedGeodesic& t, double tol = 1e-10);
// axis oriented from repelling to attracting fixed point
OrientedGeodesic axis(const GroupElement& g);

cplx cross_ratio(const BoundaryPoint& a, const BoundaryPoint& b, const BoundaryPoint& c,
                 const BoundaryPoint& d);

// rotation by pi about the geodesic
GroupElement half_turn(const OrientedGeodesic& s);

OrientedGeodesic common_perpendicular(const OrientedGeodesic& s1, const OrientedGeodesic& s2);
Width double_cross_width(const OrientedGeodesic& s1, const OrientedGeodesic& s2,
                         const OrientedGeodesic& s3);
Width width_unsigned(const OrientedGeodesic& s1, const OrientedGeodesic& s2);
// |R(u,u',w,w') + 1|, zero for orthogonal pairs
double orthogonality_defect(const OrientedGeodesic& s, const OrientedGeodesic& t);

// plane geometry for real geodesics
// real element taking s to (0 -> inf)
GroupElement to_standard_axis(const OrientedGeodesic& s);
// arclength coordinate of an interior point projected on s
double axis_coordinate(const OrientedGeodesic& s, cplx z);
// point of s at arclength coordinate t
cplx point_at(const OrientedGeodesic& s, double t);
// point at signed distance eta from s whose projection is point_at(s, t)
cplx offset_point(const OrientedGeodesic& s, double t, double eta);
double distance_to_geodesic(const OrientedGeodesic& s, cplx z);
// intersection of two crossing real geodesics; false if they do not cross
bool intersect(const OrientedGeodesic& s, const OrientedGeodesic& t, cplx& z);

}  // namespace hyp
