#pragma once

// Boundary geometry templated on the real scalar; the double API in geodesy.hpp
// and the extended-precision hexagon both run through these.

#include <array>
#include <limits>
#include <utility>

#include <boost/math/constants/constants.hpp>

#include "hyp/errors.hpp"
#include "hyp/precision.hpp"

namespace hyp::generic {

template <class R>
struct Point {
  Cx<R> z{};
  bool inf = false;
};

template <class R>
struct Geo {
  Point<R> tail, head;
};

template <class R>
using M2 = std::array<Cx<R>, 4>;

template <class R>
Point<R> at_infinity() {
  Point<R> p;
  p.inf = true;
  return p;
}

template <class R>
bool same(const Point<R>& p, const Point<R>& q, double tol) {
  using std::abs;
  if (p.inf || q.inf) return p.inf && q.inf;
  return abs(p.z - q.z) <= R(tol) * (R(1) + abs(p.z) + abs(q.z));
}

template <class R>
Cx<R> cross_ratio(const Point<R>& a, const Point<R>& b, const Point<R>& c, const Point<R>& d) {
  using std::abs;
  int infs = a.inf + b.inf + c.inf + d.inf;
  if (infs > 1) fail(Fault::DegenerateQuadruple, "more than one point at infinity");
  R s(1);
  for (const Point<R>* p : {&a, &b, &c, &d})
    if (!p->inf && abs(p->z) > s) s = abs(p->z);
  auto diff = [](const Point<R>& p, const Point<R>& q) {
    return (p.inf || q.inf) ? Cx<R>(R(1)) : Cx<R>(p.z - q.z);
  };
  Cx<R> num = diff(a, c) * diff(b, d);
  Cx<R> den = diff(a, d) * diff(b, c);
  R eps = std::numeric_limits<R>::epsilon();
  if (abs(den) <= 10 * eps * s * s) fail(Fault::DegenerateQuadruple, "cross ratio undefined");
  return num / den;
}

template <class R>
M2<R> mul(const M2<R>& p, const M2<R>& q) {
  return {p[0] * q[0] + p[1] * q[2], p[0] * q[1] + p[1] * q[3], p[2] * q[0] + p[3] * q[2],
          p[2] * q[1] + p[3] * q[3]};
}

template <class R>
M2<R> unimodular(const M2<R>& m) {
  using std::sqrt;
  Cx<R> s = sqrt(m[0] * m[3] - m[1] * m[2]);
  return {m[0] / s, m[1] / s, m[2] / s, m[3] / s};
}

template <class R>
M2<R> half_turn(const Geo<R>& g) {
  const Cx<R> I(R(0), R(1));
  if (g.head.inf) return unimodular<R>({I, R(-2) * g.tail.z * I, Cx<R>(R(0)), -I});
  if (g.tail.inf) return unimodular<R>({I, R(-2) * g.head.z * I, Cx<R>(R(0)), -I});
  const Cx<R>&p = g.tail.z, &q = g.head.z;
  return unimodular<R>({p + q, R(-2) * p * q, Cx<R>(R(2)), -(p + q)});
}

// (repelling, attracting); ties keep (a-d-s)/2c first with Re(s) >= 0
template <class R>
std::pair<Point<R>, Point<R>> fixed_points(const M2<R>& g) {
  using std::abs;
  using std::sqrt;
  const Cx<R>&a = g[0], &b = g[1], &c = g[2], &d = g[3];
  R sc = abs(a) + abs(b) + abs(c) + abs(d);
  R eps = std::numeric_limits<R>::epsilon();
  if (abs(b) <= 50 * eps * sc && abs(c) <= 50 * eps * sc && abs(a - d) <= 50 * eps * sc)
    fail(Fault::IdentityElement, "identity has no fixed points");
  Cx<R> tr = a + d;
  Cx<R> s = sqrt(tr * tr - R(4));
  if (s.real() < 0 || (s.real() == 0 && s.imag() < 0)) s = -s;
  R up = abs(tr + s), dn = abs(tr - s);
  bool minus_attracts = dn > up * (1 + 100 * eps) && !(up > dn * (1 + 100 * eps));
  if (abs(c) <= 10 * eps * sc) {
    if (abs(d - a) <= 10 * eps * sc) return {at_infinity<R>(), at_infinity<R>()};
    Point<R> fin{b / (d - a), false};
    if (abs(a) > abs(d)) return {fin, at_infinity<R>()};
    return {at_infinity<R>(), fin};
  }
  Cx<R> qp = a - d + s, qm = a - d - s;
  Cx<R> zp, zm;
  if (abs(qp) >= abs(qm)) {
    zp = qp / (R(2) * c);
    zm = R(-2) * b / qp;
  } else {
    zm = qm / (R(2) * c);
    zp = R(-2) * b / qm;
  }
  Point<R> P{zp, false}, Q{zm, false};
  if (minus_attracts) return {P, Q};
  return {Q, P};
}

template <class R>
Cx<R> raw_width(const Geo<R>& s1, const Geo<R>& s2, const Geo<R>& s3) {
  using std::log;
  return log(cross_ratio<R>(s1.tail, s2.tail, s3.head, s3.tail));
}

template <class R>
R orthogonality_defect(const Geo<R>& s, const Geo<R>& t) {
  using std::abs;
  return abs(cross_ratio<R>(s.tail, s.head, t.tail, t.head) + R(1));
}

template <class R>
Cx<R> reduce_strip(const Cx<R>& v) {
  using std::round;
  const R pi = boost::math::constants::pi<R>();
  R im = v.imag();
  im = im - 2 * pi * round(im / (2 * pi));
  if (im <= -pi) im += 2 * pi;
  if (im > pi) im -= 2 * pi;
  return Cx<R>(v.real(), im);
}

template <class R>
Geo<R> common_perpendicular(const Geo<R>& s1, const Geo<R>& s2) {
  using std::abs;
  double tol = 1e-12;
  if (same<R>(s1.tail, s2.tail, tol) || same<R>(s1.tail, s2.head, tol) ||
      same<R>(s1.head, s2.tail, tol) || same<R>(s1.head, s2.head, tol))
    fail(Fault::SharedEndpoint, "no common perpendicular");
  std::pair<Point<R>, Point<R>> fp;
  try {
    fp = fixed_points<R>(mul<R>(half_turn<R>(s1), half_turn<R>(s2)));
  } catch (const GeometryError&) {
    fail(Fault::BadParameters, "geodesics coincide");
  }
  Geo<R> p{fp.first, fp.second};
  Cx<R> mu = raw_width<R>(s1, s2, p);
  R tiny = 1e-10;
  bool flip = abs(mu.real()) > tiny ? mu.real() < 0 : reduce_strip<R>(mu).imag() < 0;
  if (flip) std::swap(p.tail, p.head);
  return p;
}

}  // namespace hyp::generic
