#include "hyp/moebius.hpp"

#include <cmath>

#include "hyp/generic.hpp"

namespace hyp {

namespace {

double scale_of(cplx a, cplx b, cplx c, cplx d) {
  return std::abs(a) + std::abs(b) + std::abs(c) + std::abs(d);
}

bool needs_flip(const std::array<cplx, 4>& m) {
  double tol = 1e-13 * (1.0 + scale_of(m[0], m[1], m[2], m[3]));
  cplx tr = m[0] + m[3];
  if (std::abs(tr.real()) > tol) return tr.real() < 0;
  if (std::abs(tr.imag()) > tol) return tr.imag() < 0;
  for (const cplx& e : m) {
    if (std::abs(e.real()) > tol) return e.real() < 0;
    if (std::abs(e.imag()) > tol) return e.imag() < 0;
  }
  return false;
}

}  // namespace

bool same_point(const BoundaryPoint& p, const BoundaryPoint& q, double tol) {
  if (p.inf || q.inf) return p.inf && q.inf;
  return std::abs(p.z - q.z) <= tol * (1.0 + std::abs(p.z) + std::abs(q.z));
}

cplx reduce_strip(cplx v) {
  double im = std::remainder(v.imag(), 2 * kPi);
  if (im <= -kPi) im += 2 * kPi;
  return {v.real(), im};
}

Width::Width(cplx v) : v_(reduce_strip(v)) {}

double strip_distance(cplx w1, cplx w2) { return std::abs(reduce_strip(w1 - w2)); }

GroupElement GroupElement::normalize(cplx a, cplx b, cplx c, cplx d) {
  cplx det = a * d - b * c;
  double n2 = std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d);
  if (!(std::abs(det) > 1e-14 * n2)) fail(Fault::SingularMatrix, "determinant vanishes");
  cplx s = std::sqrt(det);
  GroupElement g;
  g.m_ = {a / s, b / s, c / s, d / s};
  if (needs_flip(g.m_))
    for (cplx& e : g.m_) e = -e;
  return g;
}

bool GroupElement::is_real(double tol) const {
  double t = tol * (1.0 + scale_of(m_[0], m_[1], m_[2], m_[3]));
  for (const cplx& e : m_)
    if (std::abs(e.imag()) > t) return false;
  return true;
}

// products and inverses of unimodular matrices stay unimodular; only the sign is fixed
GroupElement GroupElement::operator*(const GroupElement& o) const {
  const auto& p = m_;
  const auto& q = o.m_;
  GroupElement g;
  g.m_ = {p[0] * q[0] + p[1] * q[2], p[0] * q[1] + p[1] * q[3], p[2] * q[0] + p[3] * q[2],
          p[2] * q[1] + p[3] * q[3]};
  if (needs_flip(g.m_))
    for (cplx& e : g.m_) e = -e;
  return g;
}

GroupElement GroupElement::inverse() const {
  GroupElement g;
  g.m_ = {m_[3], -m_[1], -m_[2], m_[0]};
  if (needs_flip(g.m_))
    for (cplx& e : g.m_) e = -e;
  return g;
}

GroupElement GroupElement::pow(int n) const {
  GroupElement base = n < 0 ? inverse() : *this;
  GroupElement r;
  for (int k = 0; k < std::abs(n); ++k) r = r * base;
  return r;
}

BoundaryPoint GroupElement::apply(const BoundaryPoint& p) const {
  const cplx &a = m_[0], &b = m_[1], &c = m_[2], &d = m_[3];
  if (p.inf) {
    if (c == cplx(0)) return BoundaryPoint::infinity();
    return BoundaryPoint(a / c);
  }
  cplx den = c * p.z + d;
  if (den == cplx(0)) return BoundaryPoint::infinity();
  return BoundaryPoint((a * p.z + b) / den);
}

double distance(const GroupElement& g, const GroupElement& h) {
  double s = 0;
  for (int k = 0; k < 4; ++k) s += std::norm(g.entries()[k] - h.entries()[k]);
  return std::sqrt(s);
}

GroupElement G(double L) {
  return GroupElement::normalize(std::exp(L / 2), 0.0, 0.0, std::exp(-L / 2));
}
GroupElement U(double T) { return GroupElement::normalize(1.0, T, 0.0, 1.0); }
GroupElement V(double T) { return GroupElement::normalize(1.0, 0.0, T, 1.0); }
GroupElement Rot(double delta) {
  double c = std::cos(delta / 2), s = std::sin(delta / 2);
  return GroupElement::normalize(c, s, -s, c);
}
GroupElement Mat(cplx a, cplx b, cplx c, cplx d) { return GroupElement::normalize(a, b, c, d); }

GroupElement standard(Standard kind, double p) {
  switch (kind) {
    case Standard::G: return G(p);
    case Standard::U: return U(p);
    case Standard::V: return V(p);
    case Standard::R: return Rot(p);
    case Standard::Mat: break;
  }
  fail(Fault::BadParameters, "Mat takes four entries");
}

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Hyperbolic: return "hyperbolic";
    case Kind::Parabolic: return "parabolic";
    case Kind::Elliptic: return "elliptic";
    case Kind::Identity: return "identity";
  }
  return "?";
}

Width displacement(const GroupElement& g) {
  cplx mu = 2.0 * std::acosh(g.trace() / 2.0);
  if (mu.real() < 0) mu = -mu;
  return Width(mu);
}

Kind classify(const GroupElement& g) {
  if (!g.is_real()) fail(Fault::ComplexElement, "classify needs a real element");
  double t = std::abs(g.trace().real());
  if (std::abs(t - 2.0) <= 1e-10) {
    bool ident = std::abs(g.b()) <= 1e-10 && std::abs(g.c()) <= 1e-10;
    return ident ? Kind::Identity : Kind::Parabolic;
  }
  return t > 2.0 ? Kind::Hyperbolic : Kind::Elliptic;
}

std::pair<BoundaryPoint, BoundaryPoint> fixed_points(const GroupElement& g) {
  auto fp = generic::fixed_points<double>({g.a(), g.b(), g.c(), g.d()});
  auto conv = [](const generic::Point<double>& p) {
    return p.inf ? BoundaryPoint::infinity() : BoundaryPoint(p.z);
  };
  return {conv(fp.first), conv(fp.second)};
}

Frame push_right(const Frame& w, double t) {
  return w * Rot(-kPi / 2) * G(t) * Rot(kPi / 2);
}

cplx basepoint(const Frame& w) { return w.act(cplx(0, 1)); }

double direction_angle(const Frame& w) {
  cplx den = w.c() * cplx(0, 1) + w.d();
  return std::arg(cplx(0, 1) / (den * den));
}

GroupElement hypercycle(Flow kind, double r, double s) {
  if (!(r > 0)) fail(Fault::NonpositiveRadius, "hypercycle distance must be positive");
  GroupElement core = Rot(-kPi / 2) * G(s / std::cosh(r)) * Rot(kPi / 2);
  if (kind == Flow::U) return G(r) * core * G(-r);
  return G(-r) * core * G(r);
}

double hdist(cplx z, cplx w) {
  return 2.0 * std::asinh(std::abs(z - w) / (2.0 * std::sqrt(z.imag() * w.imag())));
}

double base_displacement(const GroupElement& g) {
  double s = std::norm(g.a()) + std::norm(g.b()) + std::norm(g.c()) + std::norm(g.d());
  return std::acosh(std::max(1.0, s / 2.0));
}

}  // namespace hyp
