#include "hyp/hexagon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include <boost/math/constants/constants.hpp>

#include "hyp/generic.hpp"

namespace hyp {

namespace {

const cplx I(0, 1);

// +-acosh(v) reduced to the strip, nearest to ref; principal (Re >= 0) without ref
template <class R>
typename complex_of<R>::type match_branch(const typename complex_of<R>::type& v,
                                          std::optional<cplx> ref, double tol, const char* what) {
  using C = typename complex_of<R>::type;
  C w = generic::reduce_strip<R>(C(acosh(v)));
  C cand[2] = {w, generic::reduce_strip<R>(C(-w))};
  if (!ref) return cand[0];
  double d0 = strip_distance(lower<R>(cand[0]), *ref);
  double d1 = strip_distance(lower<R>(cand[1]), *ref);
  int k = d0 <= d1 ? 0 : 1;
  if (std::min(d0, d1) > tol)
    fail(Fault::BranchMismatch, std::string(what) + " closed form disagrees with geometry");
  return cand[k];
}

struct Refs {
  std::optional<cplx> H2, H4, H5;
  double tol = 1e-5;
};

template <class R>
ExactWidths exact_impl(const HexParams& p, const Refs& refs) {
  using C = typename complex_of<R>::type;
  ExactCore<R> k = exact_core<R>(p);
  C M(R(p.M.real()), R(p.M.imag()));
  C h2 = match_branch<R>(k.coshH2, refs.H2, refs.tol, "H2");
  C h4 = match_branch<R>(k.coshH4, refs.H4, refs.tol, "H4");
  // law of cosines with cosh H6 = -cosh M, sinh H6 = -sinh M
  C coshH5 = (k.coshH2 + cosh(M) * k.coshH4) / (-sinh(M) * sinh(h4));
  C h5 = match_branch<R>(coshH5, refs.H5, refs.tol, "H5");
  ExactWidths out;
  out.H2 = Width(lower<R>(h2));
  out.H4 = Width(lower<R>(h4));
  out.H5 = Width(lower<R>(h5));
  out.H6 = Width(p.M + I * kPi);
  out.x = lower<R>(k.x);
  out.N1 = lower<R>(k.N1);
  out.N2 = lower<R>(k.N2);
  out.D = lower<R>(k.D);
  out.coshH2 = lower<R>(k.coshH2);
  out.coshH4 = lower<R>(k.coshH4);
  return out;
}

std::optional<HexagonH> try_build(const HexParams& p) {
  try {
    return build_hexagon(p);
  } catch (const GeometryError&) {
    return std::nullopt;
  }
}

bool m_is_real(cplx M) { return std::abs(M.imag()) <= 1e-14 * (1 + std::abs(M)); }

}  // namespace

HexParams make_params(double a, double b, double c, double L, cplx J, cplx M) {
  if (!(a > 0)) fail(Fault::NonpositiveA, "a must be positive");
  return {a, b, c, (1 + b * c) / a, L, J, M};
}

namespace {

template <class R>
HexagonH build_impl(const HexParams& p) {
  using C = Cx<R>;
  using G = generic::Geo<R>;
  using P = generic::Point<R>;
  HexagonH h;
  h.p = p;
  ExactCore<R> k = exact_core<R>(p);
  h.N1 = lower<R>(k.N1);
  h.N2 = lower<R>(k.N2);
  h.D = lower<R>(k.D);
  h.e0 = lower<R>(k.e0);
  h.e1 = lower<R>(k.e1);
  h.e1_infinite = k.e1_infinite;
  h.x = lower<R>(k.x);
  if (abs(k.e0) <= R(1e-14)) fail(Fault::DegenerateHexagon, "H~1 and H~3 share the endpoint 0");
  C J = lift<R>(p.J), M = lift<R>(p.M);
  C Mhat = tanh(M / R(2));
  if (abs(Mhat) <= R(1e-14)) fail(Fault::BadParameters, "M must be nonzero");
  C f0 = -Mhat * J, f1 = -J / Mhat;
  h.Mhat = lower<R>(Mhat);
  h.f0 = lower<R>(f0);
  h.f1 = lower<R>(f1);

  std::array<G, 6> S;
  S[0] = G{generic::at_infinity<R>(), P{C(R(0)), false}};
  S[2] = G{P{k.e0, false}, k.e1_infinite ? generic::at_infinity<R>() : P{k.e1, false}};
  S[5] = G{P{-J, false}, P{J, false}};
  S[4] = G{P{f0, false}, P{f1, false}};
  try {
    S[1] = generic::common_perpendicular<R>(S[0], S[2]);
    S[3] = generic::common_perpendicular<R>(S[2], S[4]);
  } catch (const GeometryError& e) {
    if (e.fault() == Fault::SharedEndpoint) fail(Fault::DegenerateHexagon, e.what());
    throw;
  }
  for (int i = 0; i < 6; ++i) {
    const G &prev = S[(i + 5) % 6], &next = S[(i + 1) % 6];
    if (generic::orthogonality_defect<R>(prev, S[i]) > R(1e-8) ||
        generic::orthogonality_defect<R>(next, S[i]) > R(1e-8))
      fail(Fault::NotOrthogonal, "hexagon sides are not orthogonal");
    h.width[i] = Width(lower<R>(generic::reduce_strip<R>(generic::raw_width<R>(prev, next, S[i]))));
    auto conv = [](const P& q) {
      return q.inf ? BoundaryPoint::infinity() : BoundaryPoint(lower<R>(q.z));
    };
    h.side[i].tail = conv(S[i].tail);
    h.side[i].head = conv(S[i].head);
  }

  h.j = std::abs(p.L / 2 - std::log(std::abs(p.J)));
  h.E = (std::abs(p.c) + std::abs(p.b) + std::abs(p.b * p.c) + 1) / std::abs(p.a) *
        std::exp(h.j - p.L / 2);
  cplx ys = (p.c / p.a) * std::exp(-p.L) * p.J + (p.b / p.a) / p.J;
  cplx y = std::sqrt(1.0 - (h.N1 / h.N2) * (h.N1 / h.N2) + h.x * h.x);
  h.y = std::abs(y - ys) <= std::abs(y + ys) ? y : -y;
  return h;
}

}  // namespace

HexagonH build_hexagon(const HexParams& p, Precision prec) {
  if (!(p.L > 0)) fail(Fault::BadParameters, "L must be positive");
  if (p.J == cplx(0)) fail(Fault::BadParameters, "J must be nonzero");
  if (std::abs(p.a * p.d - p.b * p.c - 1.0) > 1e-10) fail(Fault::BadParameters, "ad - bc != 1");
  if (prec == Precision::Extended) return build_impl<Extended>(p);
  return build_impl<double>(p);
}

ExactWidths exact_widths(const HexParams& p, const HexagonH* geometric, Precision prec,
                         double branch_tol) {
  std::optional<HexagonH> local;
  if (!geometric) {
    local = try_build(p);
    if (local) geometric = &*local;
  }
  Refs refs;
  refs.tol = branch_tol;
  if (geometric) {
    refs.H2 = geometric->width[1].value();
    refs.H4 = geometric->width[3].value();
    refs.H5 = geometric->width[4].value();
  } else {
    refs.tol = std::numeric_limits<double>::infinity();
    cplx M = p.M;
    cplx xs = (p.c / p.a) * std::exp(-p.L) * p.J - (p.b / p.a) / p.J;
    cplx ys = (p.c / p.a) * std::exp(-p.L) * p.J + (p.b / p.a) / p.J;
    bool plus = m_is_real(M);
    refs.H2 = cplx(0, kPi);
    refs.H4 = plus ? M + xs : -M - xs;
    refs.H5 = (plus ? I * kPi : cplx(0)) + ys / std::sinh(M);
  }
  if (prec == Precision::Extended) return exact_impl<Extended>(p, refs);
  return exact_impl<double>(p, refs);
}

AsymptoticWidths asymptotic_widths(const HexParams& p, const HexagonH* geometric) {
  AsymptoticWidths r;
  const cplx a = p.a, b = p.b, c = p.c, J = p.J, M = p.M;
  r.xs = (c / a) * std::exp(-p.L) * J - (b / a) / J;
  r.ys = (c / a) * std::exp(-p.L) * J + (b / a) / J;
  r.j = std::abs(p.L / 2 - std::log(std::abs(J)));
  r.E = (std::abs(c) + std::abs(b) + std::abs(b * c) + 1) / std::abs(a) * std::exp(r.j - p.L / 2);
  if (!(r.j < p.L / 2) || !(std::abs(M) > r.E))
    fail(Fault::HypothesisViolated, "need j < L/2 and |M| > E");
  r.budget4 = std::abs(1.0 / std::tanh(M)) * r.E * r.E;
  r.budget5 = std::pow(r.E / std::abs(std::sinh(M)), 3);

  cplx h4p = M + r.xs, h5p = I * kPi + r.ys / std::sinh(M);
  cplx h4m = -M - r.xs, h5m = r.ys / std::sinh(M);

  std::optional<HexagonH> local;
  if (!geometric) {
    local = try_build(p);
    if (local) geometric = &*local;
  }
  bool plus = m_is_real(M);
  if (geometric) {
    cplx g4 = geometric->width[3].value(), g5 = geometric->width[4].value();
    double dp = strip_distance(h4p, g4) + strip_distance(h5p, g5);
    double dm = strip_distance(h4m, g4) + strip_distance(h5m, g5);
    plus = dp <= dm;
    double best = std::min(dp, dm), other = std::max(dp, dm);
    r.matched = best <= 1e3 * (r.budget4 + r.budget5) + 1e-9 && best < 0.5 * other;
  } else {
    r.matched = false;
  }
  r.sigma1 = plus ? 1 : -1;
  r.sigma2 = plus ? 1 : 0;
  r.H4s = Width(plus ? h4p : h4m);
  r.H5s = Width(plus ? h5p : h5m);
  return r;
}

std::array<double, 3> F_map(double a, double b, double c) {
  if (!(a > 0)) fail(Fault::NonpositiveA, "F needs a > 0");
  return {(c - b) / a, (c + b) / a, 2 * std::log(a)};
}

double B_bound(double a, double b, double c, double d) {
  return std::max({std::abs(std::log(a)), std::abs(b), std::abs(c), std::abs(d - 1)});
}

namespace {

double translation_length(double a, double d, double L) {
  return 2 * std::acosh((a * std::exp(L / 2) + d * std::exp(-L / 2)) / 2);
}

void check_hypothesis(const HexParams& p) {
  double j = std::abs(p.L / 2 - std::log(std::abs(p.J)));
  double E = (std::abs(p.c) + std::abs(p.b) + std::abs(p.b * p.c) + 1) / std::abs(p.a) *
             std::exp(j - p.L / 2);
  if (!(j < p.L / 2) || !(std::abs(p.M) > E))
    fail(Fault::HypothesisViolated, "need j < L/2 and |M| > E");
}

}  // namespace

PerpReport perp_report(double a, double b, double c, double d, double L, Precision prec) {
  if (!(a > 0)) fail(Fault::NonpositiveA, "a must be positive");
  HexParams p{a, b, c, d, L, -I * std::exp(L / 2), cplx(0, -kPi / 2)};
  check_hypothesis(p);
  PerpReport r;
  auto F = F_map(a, b, c);
  double s = std::exp(-L / 2);
  r.B = B_bound(a, b, c, d);
  r.foot = F[0] * s;
  r.angle = kPi / 2 + F[1] * s;
  r.length = L + F[2];
  r.foot_budget = std::pow(r.B + 1, 3) * std::exp(-L);
  r.angle_budget = std::pow(r.B + 1, 2) * std::exp(-L);
  r.length_budget = (r.B + 1) * std::exp(-L);
  ExactWidths ew = exact_widths(p, nullptr, prec);
  r.foot_exact = ew.H5.re();
  r.angle_exact = ew.H4.im();
  r.length_exact = translation_length(a, d, L);
  return r;
}

ParallelReport parallel_report(double a, double b, double c, double d, double L, double M,
                               Precision prec) {
  if (!(a > 0)) fail(Fault::NonpositiveA, "a must be positive");
  if (!(M > 0)) fail(Fault::HypothesisViolated, "M must be positive");
  HexParams p{a, b, c, d, L, std::exp(L / 2), M};
  check_hypothesis(p);
  ParallelReport r;
  auto F = F_map(a, b, c);
  double s = std::exp(-L / 2);
  r.B = B_bound(a, b, c, d);
  r.perp_length = M + F[0] * s;
  r.foot_shift = F[1] * s / std::sinh(M);
  r.length = L + F[2];
  r.perp_budget = std::pow(r.B + 1, 2) / std::tanh(M) * std::exp(-L);
  r.foot_budget = std::pow(r.B + 1, 3) * std::exp(-1.5 * L) / std::pow(std::sinh(M), 3);
  r.foot_budget_observed = std::pow(r.B + 1, 2) / std::tanh(M) * std::exp(-L) / std::sinh(M);
  r.length_budget = (r.B + 1) * std::exp(-L);
  ExactWidths ew = exact_widths(p, nullptr, prec);
  r.perp_exact = ew.H4.re();
  r.foot_exact = ew.H5.re();
  r.length_exact = translation_length(a, d, L);
  return r;
}

LemmaXReport lemma_x_report(double a, double b, double c, double d, double L, double m1, double m2,
                            double k1, double k2, int sign, Precision prec) {
  if (!(a > 0)) fail(Fault::NonpositiveA, "a must be positive");
  if (!(m1 > 0) || !(m2 >= 0 && m2 < 0.5) || !(k2 >= 0))
    fail(Fault::HypothesisViolated, "need m1 > 0, 0 <= m2 < 1/2, k2 >= 0");
  double K = k1 + k2 * L;
  if (!(std::abs(K) < L / 2)) fail(Fault::HypothesisViolated, "need |K| < L/2");
  LemmaXReport r;
  r.M = m1 * std::exp(-m2 * L);
  r.J = std::exp((sign >= 0 ? K : -K) + L / 2);
  r.budget = (std::abs(c) + std::abs(b) + 1) / a * std::exp(k1 + (k2 - 0.5) * L);
  HexParams p{a, b, c, d, L, r.J, r.M};
  ExactWidths ew = exact_widths(p, nullptr, prec);
  r.exact = ew.H4.re();
  return r;
}

double LawResiduals::worst() const {
  return std::max(sines, *std::max_element(cosines.begin(), cosines.end()));
}

LawResiduals law_residuals(const std::array<cplx, 6>& H) {
  LawResiduals r;
  cplx r1 = std::sinh(H[0]) / std::sinh(H[3]);
  cplx r2 = std::sinh(H[2]) / std::sinh(H[5]);
  cplx r3 = std::sinh(H[4]) / std::sinh(H[1]);
  double sc = std::max({std::abs(r1), std::abs(r2), std::abs(r3), 1e-300});
  r.sines = std::max({std::abs(r1 - r2), std::abs(r2 - r3), std::abs(r1 - r3)}) / sc;
  for (int i = 0; i < 6; ++i) {
    const cplx &hm = H[(i + 4) % 6], &hp = H[(i + 2) % 6], &ho = H[(i + 3) % 6];
    cplx t1 = std::cosh(hm) * std::cosh(hp);
    cplx t2 = std::sinh(hm) * std::sinh(hp) * std::cosh(ho);
    cplx lhs = std::cosh(H[i]);
    double s = std::max({1.0, std::abs(lhs), std::abs(t1), std::abs(t2)});
    r.cosines[i] = std::abs(lhs - t1 - t2) / s;
  }
  return r;
}

}  // namespace hyp
