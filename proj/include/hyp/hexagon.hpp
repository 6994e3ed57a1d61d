#pragma once

#include <array>

#include "hyp/geodesy.hpp"
#include "hyp/precision.hpp"

namespace hyp {

struct HexParams {
  cplx a, b, c, d;
  double L = 0;
  cplx J;
  cplx M;
};

HexParams make_params(double a, double b, double c, double L, cplx J, cplx M);

struct HexagonH {
  HexParams p;
  std::array<OrientedGeodesic, 6> side;  // H~1 .. H~6
  std::array<Width, 6> width;            // H1 .. H6
  cplx N1, N2, D, e0, e1, Mhat, f0, f1, x, y;
  bool e1_infinite = false;
  double E = 0, j = 0;
};

// N1, N2, D, fixed points and the closed-form cosh values, in precision R
template <class R>
struct ExactCore {
  using C = typename complex_of<R>::type;
  C N1, N2, D, e0, e1, x, coshH2, coshH4;
  bool e1_infinite = false;
};

template <class R>
ExactCore<R> exact_core(const HexParams& p) {
  using C = typename complex_of<R>::type;
  using std::exp;
  using std::sqrt;
  auto lift = [](cplx v) { return C(R(v.real()), R(v.imag())); };
  C a = lift(p.a), b = lift(p.b), c = lift(p.c), d = lift(p.d), J = lift(p.J), M = lift(p.M);
  R L(p.L);
  R ep = exp(L / 2), em = exp(-L / 2);
  ExactCore<R> k;
  k.N1 = a * ep - d * em;
  C s = a * ep + d * em;
  k.N2 = sqrt(s * s - R(4));
  if (k.N2.real() < 0 || (k.N2.real() == 0 && k.N2.imag() < 0)) k.N2 = -k.N2;
  k.D = R(2) * c * em;
  C plus = k.N1 + k.N2, minus = k.N1 - k.N2;
  // N1^2 - N2^2 = -4bc keeps the small root stable
  if (abs(plus) >= abs(minus)) {
    k.e1_infinite = (c == C(0));
    if (!k.e1_infinite) k.e1 = plus / k.D;
    k.e0 = R(-2) * b * ep / plus;
  } else {
    k.e0 = minus / k.D;
    k.e1 = R(-2) * b * ep / minus;
  }
  k.x = (k.D * J * J - R(2) * b * ep) / (R(2) * J * k.N2);
  k.coshH2 = -k.N1 / k.N2;
  k.coshH4 = (k.N1 / k.N2) * cosh(M) + k.x * sinh(M);
  return k;
}

HexagonH build_hexagon(const HexParams& p, Precision prec = Precision::Extended);

struct ExactWidths {
  Width H2, H4, H5, H6;
  cplx x, N1, N2, D, coshH2, coshH4;
};

// closed-form widths, branch matched against the geometric hexagon (built when not supplied)
ExactWidths exact_widths(const HexParams& p, const HexagonH* geometric = nullptr,
                         Precision prec = Precision::Double, double branch_tol = 1e-5);

struct AsymptoticWidths {
  Width H4s, H5s;
  cplx xs, ys;
  int sigma1 = 1, sigma2 = 1;
  double E = 0, j = 0;
  double budget4 = 0, budget5 = 0;  // coth(M) E^2 and E^3 / sinh^3(M)
  bool matched = true;              // sigma pair agrees with the geometric hexagon
};

AsymptoticWidths asymptotic_widths(const HexParams& p, const HexagonH* geometric = nullptr);

std::array<double, 3> F_map(double a, double b, double c);
double B_bound(double a, double b, double c, double d);

struct PerpReport {
  double foot = 0, angle = 0, length = 0;
  double foot_budget = 0, angle_budget = 0, length_budget = 0;
  double B = 0;
  double foot_exact = 0, angle_exact = 0, length_exact = 0;
};
PerpReport perp_report(double a, double b, double c, double d, double L,
                       Precision prec = Precision::Double);

struct ParallelReport {
  double perp_length = 0, foot_shift = 0, length = 0;
  double perp_budget = 0, foot_budget = 0, length_budget = 0;
  double foot_budget_observed = 0;  // (B+1)^2 coth(M) e^{-L} / sinh(M)
  double B = 0;
  double perp_exact = 0, foot_exact = 0, length_exact = 0;
};
ParallelReport parallel_report(double a, double b, double c, double d, double L, double M,
                               Precision prec = Precision::Double);

struct LemmaXReport {
  double M = 0, budget = 0, exact = 0;
  cplx J;
};
LemmaXReport lemma_x_report(double a, double b, double c, double d, double L, double m1, double m2,
                            double k1, double k2, int sign = 1,
                            Precision prec = Precision::Double);

struct LawResiduals {
  double sines = 0;
  std::array<double, 6> cosines{};
  double worst() const;
};
// residuals relative to the magnitude of the terms involved
LawResiduals law_residuals(const std::array<cplx, 6>& H);

}  // namespace hyp
