#include <gtest/gtest.h>

#include <cmath>

#include "fixtures_util.hpp"
#include "hyp/hexagon.hpp"
#include "hyp/stats.hpp"

using namespace hyp;

namespace {

const cplx I(0, 1);

HexParams random_params(Rng& r, double L, cplx J, cplx M) {
  return make_params(r.uniform(0.5, 2), r.uniform(-1, 1), r.uniform(-1, 1), L, J, M);
}

template <class T>
Fault fault_of(T&& f) {
  try {
    f();
  } catch (const GeometryError& e) {
    return e.fault();
  }
  ADD_FAILURE() << "no error";
  return Fault::BadParameters;
}

}  // namespace

TEST(BuildHexagon, H6IsMPlusIPi) {
  Rng r(101);
  for (int k = 0; k < 200; ++k) {
    double L = r.uniform(4, 14), M = r.uniform(0.2, 2);
    HexagonH h = build_hexagon(random_params(r, L, std::exp(L / 2), M));
    EXPECT_LE(strip_distance(h.width[5].value(), M + I * kPi), 1e-10);
  }
}

TEST(BuildHexagon, FeetProductIsJSquared) {
  Rng r(103);
  for (int k = 0; k < 200; ++k) {
    double L = r.uniform(4, 10);
    cplx J = std::polar(std::exp(L / 2 + r.uniform(-1, 1)), r.uniform(-0.3, 0.3));
    cplx M(r.uniform(0.2, 2), r.uniform(-0.5, 0.5));
    HexagonH h = build_hexagon(random_params(r, L, J, M));
    EXPECT_LE(std::abs(h.f0 * h.f1 - J * J), 1e-9 * std::abs(J * J));
  }
}

TEST(BuildHexagon, SidesOrthogonalAndLawsHold) {
  Rng r(107);
  for (int k = 0; k < 100; ++k) {
    double L = r.uniform(4, 12);
    HexagonH h = build_hexagon(random_params(r, L, std::exp(L / 2), r.uniform(0.3, 2)));
    for (int i = 0; i < 6; ++i)
      EXPECT_LE(orthogonality_defect(h.side[i], h.side[(i + 1) % 6]), 1e-8);
    std::array<cplx, 6> H;
    for (int i = 0; i < 6; ++i) H[i] = h.width[i].value();
    EXPECT_LE(law_residuals(H).worst(), 1e-8);
  }
}

TEST(BuildHexagon, DegenerateSharedEndpoint) {
  EXPECT_EQ(fault_of([] { build_hexagon(make_params(1, 0, 1, 5, std::exp(2.5), 1.0)); }),
            Fault::DegenerateHexagon);
}

TEST(BuildHexagon, BadInputs) {
  EXPECT_EQ(fault_of([] { make_params(-1, 0, 0, 5, 1.0, 1.0); }), Fault::NonpositiveA);
  EXPECT_EQ(fault_of([] { build_hexagon(make_params(1, 0.2, 0.3, 0, 1.0, 1.0)); }), Fault::BadParameters);
}

TEST(ExactWidths, CoshH2MatchesGeometry) {
  Rng r(109);
  for (int k = 0; k < 300; ++k) {
    HexParams p = random_params(r, 8, std::exp(4.0), 0.7);
    HexagonH h = build_hexagon(p);
    ExactWidths ew = exact_widths(p, &h);
    cplx geo = std::cosh(h.width[1].value());
    EXPECT_LE(std::abs(geo - ew.coshH2), 1e-9 * std::abs(ew.coshH2));
    cplx geo4 = std::cosh(h.width[3].value());
    EXPECT_LE(std::abs(geo4 - ew.coshH4), 1e-9 * std::abs(ew.coshH4));
    EXPECT_LE(strip_distance(ew.H4.value(), h.width[3].value()), 1e-9);
    EXPECT_LE(strip_distance(ew.H5.value(), h.width[4].value()), 1e-9);
  }
}

TEST(ExactWidths, ProductIdentity) {
  Rng r(113);
  for (int k = 0; k < 1000; ++k) {
    double a = r.uniform(0.5, 2), b = r.uniform(-1, 1), c = r.uniform(-1, 1), L = r.uniform(1, 8);
    HexParams p = make_params(a, b, c, L, std::exp(L / 2), 1.0);
    auto core = exact_core<Extended>(p);
    ExtendedComplex lhs = core.N1 * core.N1 - core.N2 * core.N2;
    EXPECT_NEAR(std::abs(lower<Extended>(lhs) + 4 * b * c), 0, 1e-13);
  }
}

TEST(ExactWidths, DiagonalLowerTriangularCase) {
  for (double L : {3.0, 5.0, 9.0}) {
    HexParams p = make_params(1, 0, 1, L, std::exp(L / 2), 1.0);
    auto core = exact_core<double>(p);
    EXPECT_NEAR(std::abs(core.N1 - core.N2), 0, 1e-12 * std::abs(core.N1));
    EXPECT_NEAR(std::abs(core.coshH2 + 1.0), 0, 1e-12);
    // no geometric hexagon here, the closed form still returns H2 = i pi
    ExactWidths ew = exact_widths(p);
    EXPECT_LE(strip_distance(ew.H2.value(), I * kPi), 1e-6);
  }
}

TEST(ExactWidths, UpperTriangularLimit) {
  // c = 0 puts e1 at infinity, shared with H~1; the closed form is the limit c -> 0
  Rng r(127);
  for (int k = 0; k < 50; ++k) {
    double L = r.uniform(4, 10), a = r.uniform(0.5, 2), b = r.uniform(0.1, 1);
    HexParams p0 = make_params(a, b, 0, L, std::exp(L / 2), 0.9);
    EXPECT_EQ(fault_of([&] { build_hexagon(p0); }), Fault::DegenerateHexagon);
    EXPECT_TRUE(exact_core<double>(p0).e1_infinite);
    ExactWidths lim = exact_widths(p0);
    HexParams p1 = make_params(a, b, 1e-7, L, std::exp(L / 2), 0.9);
    ExactWidths near = exact_widths(p1);
    EXPECT_LE(strip_distance(lim.H4.value(), near.H4.value()), 1e-6);
    EXPECT_LE(strip_distance(lim.H5.value(), near.H5.value()), 1e-6);
  }
}

TEST(ExactWidths, CoshH2SecondOrder) {
  double a = 1.2, b = 0.3, c = -0.4;
  std::vector<double> xs, ys;
  for (double L = 4; L <= 12; L += 1) {
    auto core = exact_core<Extended>(make_params(a, b, c, L, std::exp(L / 2), 1.0));
    Extended first = Extended(2 * b * c / (a * a)) * exp(Extended(-L));
    Extended resid = abs(core.coshH2.real() + 1 - first);
    xs.push_back(L);
    ys.push_back(std::log(static_cast<double>(resid)));
  }
  EXPECT_NEAR(fit_line(xs, ys).slope, -2, 0.4);
}

TEST(AsymptoticWidths, RealRegime) {
  Rng r(131);
  double L = 12, M = 1;
  for (int k = 0; k < 100; ++k) {
    HexParams p = random_params(r, L, std::exp(L / 2), M);
    cplx a = p.a, b = p.b, c = p.c;
    HexagonH h = build_hexagon(p);
    AsymptoticWidths as = asymptotic_widths(p, &h);
    double s = std::exp(-L / 2);
    EXPECT_EQ(as.sigma1, 1);
    EXPECT_EQ(as.sigma2, 1);
    EXPECT_TRUE(as.matched);
    EXPECT_LE(std::abs(as.H4s.value() - (M + (c - b) / a * s)), 1e-14);
    EXPECT_LE(strip_distance(as.H5s.value(), I * kPi + (c + b) / a * s / std::sinh(M)), 1e-14);
    EXPECT_GT(h.width[3].re(), 0);
    EXPECT_LE(strip_distance(h.width[3].value(), as.H4s.value()), budget_constant("asym_H4") * as.budget4);
  }
}

TEST(AsymptoticWidths, ImaginaryRegime) {
  Rng r(137);
  double L = 12;
  cplx M(0, -kPi / 2);
  for (int k = 0; k < 100; ++k) {
    HexParams p = random_params(r, L, -I * std::exp(L / 2), M);
    cplx a = p.a, b = p.b, c = p.c;
    HexagonH h = build_hexagon(p);
    AsymptoticWidths as = asymptotic_widths(p, &h);
    double s = std::exp(-L / 2);
    EXPECT_EQ(as.sigma1, -1);
    EXPECT_EQ(as.sigma2, 0);
    EXPECT_TRUE(as.matched);
    EXPECT_LE(strip_distance(as.H4s.value(), I * kPi / 2.0 + I * ((c + b) / a) * s), 1e-14);
    EXPECT_LE(strip_distance(as.H5s.value(), (c - b) / a * s), 1e-14);
    // coth(M) vanishes here, so the coth(M) E^2 budget degenerates; E^2 is used instead
    EXPECT_LE(strip_distance(h.width[3].value(), as.H4s.value()), as.E * as.E);
  }
}

TEST(AsymptoticWidths, DiagonalPerturbation) {
  HexParams p = make_params(1.3, 0, 0, 10, std::exp(5.0), 0.8);
  AsymptoticWidths as = asymptotic_widths(p);
  EXPECT_EQ(std::abs(as.xs), 0);
  EXPECT_LE(std::abs(as.ys), 1e-12);
  EXPECT_LE(strip_distance(as.H4s.value(), 0.8), 1e-14);
  EXPECT_LE(strip_distance(as.H5s.value(), I * kPi), 1e-12);
}

TEST(AsymptoticWidths, HypothesisViolated) {
  EXPECT_EQ(fault_of([] { asymptotic_widths(make_params(1, 0.5, 0.5, 2, std::exp(1.0), 0.01)); }),
            Fault::HypothesisViolated);
  EXPECT_EQ(fault_of([] { asymptotic_widths(make_params(1, 0.5, 0.5, 4, std::exp(5.0), 1.0)); }),
            Fault::HypothesisViolated);
}

TEST(FMap, Examples) {
  auto f = F_map(1, 0, 0);
  EXPECT_EQ(f[0], 0);
  EXPECT_EQ(f[1], 0);
  EXPECT_EQ(f[2], 0);
  f = F_map(1, -1, 1);
  EXPECT_EQ(f[0], 2);
  EXPECT_EQ(f[1], 0);
  EXPECT_EQ(f[2], 0);
  double e = std::exp(1.0);
  f = F_map(e, 1, 2);
  EXPECT_NEAR(f[0], 1 / e, 1e-15);
  EXPECT_NEAR(f[1], 3 / e, 1e-15);
  EXPECT_NEAR(f[2], 2, 1e-15);
  EXPECT_EQ(fault_of([] { F_map(0, 1, 1); }), Fault::NonpositiveA);
}

TEST(PerpReport, Trivial) {
  PerpReport r = perp_report(1, 0, 0, 1, 9);
  EXPECT_EQ(r.foot, 0);
  EXPECT_NEAR(r.angle, kPi / 2, 1e-15);
  EXPECT_NEAR(r.length, 9, 1e-15);
  EXPECT_NEAR(r.length_exact, 9, 1e-12);
}

TEST(PerpReport, WithinCalibratedBudgets) {
  Rng r(139);
  double cf = budget_constant("perp_foot"), ca = budget_constant("perp_angle");
  for (int k = 0; k < 200; ++k) {
    auto [a, b, c, d] = draw_bounded(r, 1.0);
    PerpReport p = perp_report(a, b, c, d, 10);
    EXPECT_LE(std::abs(p.foot_exact - p.foot), cf * p.foot_budget);
    EXPECT_LE(std::abs(p.angle_exact - p.angle), ca * p.angle_budget);
  }
}

TEST(PerpReport, TranslationLength) {
  Rng r(149);
  for (int k = 0; k < 1000; ++k) {
    auto [a, b, c, d] = draw_bounded(r, 1.0);
    PerpReport p = perp_report(a, b, c, d, 8);
    double mu = displacement(G(8) * Mat(a, b, c, d)).re();
    EXPECT_NEAR(mu, p.length_exact, 1e-9);
    EXPECT_LE(std::abs(mu - 8 - 2 * std::log(a)), 10 * (p.B + 1) * std::exp(-8.0));
  }
}

TEST(ParallelReport, Trivial) {
  ParallelReport r = parallel_report(1, 0, 0, 1, 10, 1.0, Precision::Extended);
  EXPECT_NEAR(r.perp_length, 1, 1e-15);
  EXPECT_EQ(r.foot_shift, 0);
  EXPECT_NEAR(r.length, 10, 1e-15);
  EXPECT_NEAR(r.perp_exact, 1, 1e-9);
  EXPECT_NEAR(r.foot_exact, 0, 1e-9);
}

TEST(ParallelReport, WithinCalibratedBudgets) {
  Rng r(151);
  double cp = budget_constant("parallel_perp"), cf = budget_constant("parallel_foot");
  for (int k = 0; k < 200; ++k) {
    auto [a, b, c, d] = draw_bounded(r, 1.0);
    ParallelReport p = parallel_report(a, b, c, d, 12, 1.0);
    EXPECT_LE(std::abs(p.perp_exact - p.perp_length), cp * p.perp_budget);
    EXPECT_LE(std::abs(p.foot_exact - p.foot_shift), cf * p.foot_budget_observed);
  }
}

TEST(ParallelReport, StatedFootBudgetOutgrown) {
  // the foot error decays like e^{-L}, so its ratio to an e^{-3L/2} budget grows with L
  double a = 1.2, b = 0.3, c = -0.4, d = (1 + b * c) / a;
  double prev = 0;
  for (double L : {8.0, 12.0, 16.0, 20.0}) {
    ParallelReport p = parallel_report(a, b, c, d, L, 1.0);
    double ratio = std::abs(p.foot_exact - p.foot_shift) / p.foot_budget;
    EXPECT_GT(ratio, prev);
    prev = ratio;
  }
  EXPECT_GT(prev, 100);
}

TEST(LemmaX, SpecializesToParallel) {
  Rng r(157);
  for (int k = 0; k < 50; ++k) {
    auto [a, b, c, d] = draw_bounded(r, 1.0);
    LemmaXReport x = lemma_x_report(a, b, c, d, 12, 0.9, 0, 0, 0);
    ParallelReport p = parallel_report(a, b, c, d, 12, 0.9);
    EXPECT_NEAR(x.M, 0.9, 1e-15);
    EXPECT_NEAR(x.exact, p.perp_exact, 1e-12);
    EXPECT_LE(std::abs(x.exact - x.M), 4 * x.budget);
  }
}

TEST(LemmaX, DiagonalWithinBudget) {
  for (double L : {8.0, 12.0, 16.0}) {
    LemmaXReport x = lemma_x_report(1.5, 0, 0, 1 / 1.5, L, 1.0, 0.1, 0.5, 0.25);
    EXPECT_LE(std::abs(x.exact - x.M), x.budget);
  }
}

TEST(LemmaX, QuarterRateSweep) {
  double a = 1.2, b = 0.3, c = -0.4, d = (1 + b * c) / a;
  std::vector<double> xs, ys;
  for (double L = 8; L <= 24; L += 2) {
    LemmaXReport x = lemma_x_report(a, b, c, d, L, 1.0, 0, 0, 0.25);
    xs.push_back(L);
    ys.push_back(std::log(std::abs(x.exact - x.M)));
  }
  EXPECT_NEAR(fit_line(xs, ys).slope, -0.25, 0.25 * 0.15);
}

TEST(LemmaX, Hypotheses) {
  EXPECT_EQ(fault_of([] { lemma_x_report(1, 0, 0, 1, 10, 1, 0.6, 0, 0); }), Fault::HypothesisViolated);
  EXPECT_EQ(fault_of([] { lemma_x_report(1, 0, 0, 1, 10, 1, 0, 0, 0.5); }), Fault::HypothesisViolated);
}

TEST(LawResiduals, PlanarSymmetricHexagon) {
  for (double a : {0.7, 1.5, 3.0}) {
    double b = std::acosh(std::cosh(a) / (std::cosh(a) - 1));
    std::array<cplx, 6> H;
    for (int i = 0; i < 6; ++i) H[i] = cplx(i % 2 ? b : a, kPi);
    EXPECT_LE(law_residuals(H).worst(), 1e-10);
    H[2] += 0.1;
    EXPECT_GT(law_residuals(H).worst(), 1e-3);
  }
}

TEST(LawResiduals, PerturbedBuiltHexagon) {
  HexagonH h = build_hexagon(make_params(1.2, 0.3, -0.4, 8, std::exp(4.0), 1.0));
  std::array<cplx, 6> H;
  for (int i = 0; i < 6; ++i) H[i] = h.width[i].value();
  H[0] += 0.1;
  EXPECT_GT(law_residuals(H).worst(), 1e-3);
}
