#pragma once

#include <array>
#include <complex>
#include <utility>

#include "hyp/errors.hpp"

namespace hyp {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// point of C u {inf}
struct BoundaryPoint {
  cplx z{};
  bool inf = false;

  BoundaryPoint() = default;
  BoundaryPoint(cplx v) : z(v) {}
  BoundaryPoint(double v) : z(v, 0.0) {}
  static BoundaryPoint infinity() {
    BoundaryPoint p;
    p.inf = true;
    return p;
  }
};

bool same_point(const BoundaryPoint& p, const BoundaryPoint& q, double tol = 1e-12);

// complex number modulo 2*pi*i, Im in (-pi, pi]
class Width {
 public:
  Width() = default;
  Width(cplx v);
  Width(double v) : Width(cplx(v, 0.0)) {}

  cplx value() const { return v_; }
  double re() const { return v_.real(); }
  double im() const { return v_.imag(); }

  Width operator-() const { return Width(-v_); }
  Width operator+(const Width& o) const { return Width(v_ + o.v_); }
  Width operator-(const Width& o) const { return Width(v_ - o.v_); }
  Width plus_i_pi() const { return Width(v_ + cplx(0.0, kPi)); }

 private:
  cplx v_{};
};

// reduce Im into (-pi, pi]
cplx reduce_strip(cplx v);
// |w1 - w2| measured modulo 2*pi*i
double strip_distance(cplx w1, cplx w2);

class GroupElement {
 public:
  GroupElement() : m_{cplx(1), cplx(0), cplx(0), cplx(1)} {}

  static GroupElement normalize(cplx a, cplx b, cplx c, cplx d);

  const cplx& a() const { return m_[0]; }
  const cplx& b() const { return m_[1]; }
  const cplx& c() const { return m_[2]; }
  const cplx& d() const { return m_[3]; }
  const std::array<cplx, 4>& entries() const { return m_; }

  cplx trace() const { return m_[0] + m_[3]; }
  cplx det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }
  bool is_real(double tol = 1e-12) const;

  GroupElement operator*(const GroupElement& o) const;
  GroupElement inverse() const;
  GroupElement pow(int n) const;

  BoundaryPoint apply(const BoundaryPoint& p) const;
  // action on an interior point of the upper half-plane (real elements)
  cplx act(cplx z) const { return (m_[0] * z + m_[1]) / (m_[2] * z + m_[3]); }

 private:
  std::array<cplx, 4> m_;
};

// Frobenius distance between normalized entries
double distance(const GroupElement& g, const GroupElement& h);

enum class Standard { G, U, V, R, Mat };

GroupElement G(double L);
GroupElement U(double T);
GroupElement V(double T);
GroupElement Rot(double delta);
GroupElement Mat(cplx a, cplx b, cplx c, cplx d);
GroupElement standard(Standard kind, double p);

enum class Kind { Hyperbolic, Parabolic, Elliptic, Identity };
const char* kind_name(Kind k);

Width displacement(const GroupElement& g);
Kind classify(const GroupElement& g);
// (repelling, attracting); elliptic and complex elements use the Re(sqrt) >= 0 convention
std::pair<BoundaryPoint, BoundaryPoint> fixed_points(const GroupElement& g);

// unit tangent vector g . (i, i)
using Frame = GroupElement;
Frame push_right(const Frame& w, double t);
cplx basepoint(const Frame& w);
// direction angle of the tangent vector in the half-plane chart
double direction_angle(const Frame& w);

enum class Flow { U, V };
GroupElement hypercycle(Flow kind, double r, double s);

// hyperbolic distance in the upper half-plane
double hdist(cplx z, cplx w);
// d(g i, i) for a real element
double base_displacement(const GroupElement& g);

}  // namespace hyp
