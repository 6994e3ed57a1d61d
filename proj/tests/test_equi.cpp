#include <gtest/gtest.h>

#include <cmath>

#include "fixtures_util.hpp"
#include "hyp/equi.hpp"
#include "hyp/lab.hpp"
#include "hyp/stats.hpp"

using namespace hyp;

namespace {

const SurfaceGroup& bolza_group() {
  static SurfaceGroup S = bolza();
  return S;
}

}  // namespace

TEST(Measure, SelfTests) {
  for (auto [s, a] : {std::pair{8, 8}, std::pair{4, 6}, std::pair{1, 3}}) {
    EmpiricalMeasure u = uniform_measure(s, a);
    EXPECT_LE(tv_uniform(u), 1e-15);
    EmpiricalMeasure p = point_mass(bolza_group(), Rot(0.3) * G(0.2), s, a);
    EXPECT_NEAR(tv_uniform(p), 1 - 1.0 / (s * a), 1e-15);
  }
}

TEST(Measure, BadBins) {
  try {
    EmpiricalMeasure m(3, 8);
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.fault(), Fault::BadParameters);
  }
  EmpiricalMeasure m(8, 8);
  try {
    m.normalize();
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.fault(), Fault::BadParameters);
  }
}

TEST(FrameBin, GroupInvariant) {
  const SurfaceGroup& S = bolza_group();
  Ball B = ball(S, 6);
  Rng r(401);
  int same = 0, total = 0;
  for (int k = 0; k < 300; ++k) {
    Frame w = Rot(r.uniform(0, 2 * kPi)) * G(r.uniform(0, 2)) * Rot(r.uniform(0, 2 * kPi));
    int b = frame_bin(S, w, 8, 8);
    const auto& g = B.elements[r.bits() % B.elements.size()];
    same += frame_bin(S, g * w, 8, 8) == b;
    ++total;
  }
  EXPECT_EQ(same, total);
}

TEST(Nu, NormalizedAndBounded) {
  const SurfaceGroup& S = bolza_group();
  Census C = census(S, 4, 0, 1);
  EmpiricalMeasure nu = nu_L(S, C);
  EXPECT_NEAR(nu.total(), 1, 1e-12);
  double tv = tv_uniform(nu);
  EXPECT_TRUE(std::isfinite(tv));
  EXPECT_GE(tv, 0);
  EXPECT_LE(tv, 1 - 1.0 / 64);
  // one class sits on a curve, far from uniform
  EXPECT_GT(tv_uniform(nu_classes(S, C, {0})), tv);
}

TEST(Nu, GoldenFixtures) {
  auto gold = load_fixture("golden.json").at("equi");
  lab::ExperimentConfig cfg;
  cfg.command = "equi";
  cfg.L = {4, 6, 8};
  cfg.samples = 1024;
  lab::Report rep = lab::run(cfg);
  EXPECT_EQ(rep.exit_code, 0);
  const auto& runs = rep.summary.at("runs");
  ASSERT_EQ(runs.size(), gold.size());
  for (size_t k = 0; k < gold.size(); ++k) {
    EXPECT_EQ(runs[k].at("classes"), gold[k].at("classes"));
    EXPECT_EQ(runs[k].at("hash"), gold[k].at("hash"));
    EXPECT_NEAR(runs[k].at("nu_tv").get<double>(), gold[k].at("nu_tv").get<double>(), 1e-12);
  }
}

TEST(MuPairs, SerialMatchesParallel) {
  const SurfaceGroup& S = bolza_group();
  PairMeasure a = mu_pairs(S, Frame(), 1, 6, 2048, 8, 8, false);
  PairMeasure b = mu_pairs(S, Frame(), 1, 6, 2048, 8, 8, true);
  EXPECT_EQ(a.mass, b.mass);
  EXPECT_EQ(a.tv, b.tv);
  EXPECT_EQ(a.k, 64);
  EXPECT_GE(a.tv, 0);
  EXPECT_LE(a.tv, 1);
}

TEST(AngleCount, WindowAndPrediction) {
  const SurfaceGroup& S = bolza_group();
  Census C = census(S, 6, 0, 1);
  AngleCount wide = angle_count(S, C, Frame(), 1, -5, 5);
  AngleCount narrow = angle_count(S, C, Frame(), 1, -1, 1);
  EXPECT_GE(wide.crossings, wide.hits);
  EXPECT_GE(wide.hits, narrow.hits);
  CountParams p;
  p.genus = 2, p.L = 6, p.l1 = 0, p.l2 = 1, p.sigma_length = 1, p.a1 = -5, p.a2 = 5;
  EXPECT_NEAR(wide.predicted, predicted_counts(Formula::Angle, p), 1e-12);
  try {
    angle_count(S, C, Frame(), 10, -5, 5);
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.fault(), Fault::BadParameters);
  }
}
