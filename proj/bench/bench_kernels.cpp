#include <benchmark/benchmark.h>

#include <cmath>

#include "hyp/equi.hpp"
#include "hyp/fuchsian.hpp"
#include "hyp/kernels.hpp"

using namespace hyp;

namespace {

const SurfaceGroup& group() {
  static SurfaceGroup G = bolza();
  return G;
}

const std::vector<GroupElement>& frontier() {
  static std::vector<GroupElement> f = ball(group(), 7.0).elements;
  return f;
}

void BM_ExpandFrontier(benchmark::State& st) {
  bool par = st.range(0) != 0;
  auto letters = group().letters();
  for (auto _ : st) {
    auto out = expand_frontier(frontier(), letters, 9.0, par);
    benchmark::DoNotOptimize(out.data());
  }
  st.SetLabel(par ? "parallel" : "serial");
}

void BM_HaarQuadrature(benchmark::State& st) {
  bool par = st.range(0) != 0;
  BoxX X = make_box({-0.3, -0.2, -0.4}, {0.25, 0.3, 0.35});
  for (auto _ : st) benchmark::DoNotOptimize(haar_quadrature(X, 96, par));
  st.SetLabel(par ? "parallel" : "serial");
}

void BM_ScanTimes(benchmark::State& st) {
  bool par = st.range(0) != 0;
  static Ball B = ball(group(), 9.0);
  double L = 6;
  std::vector<double> ts;
  for (int k = 0; k <= 200; ++k) ts.push_back(10 * std::exp(-L / 2) * k / 200);
  BoxX X = b_epsilon(0.2);
  for (auto _ : st) {
    auto hits = scan_times(Frame(), L, ts, B.elements, X, par);
    benchmark::DoNotOptimize(hits.data());
  }
  st.SetLabel(par ? "parallel" : "serial");
}

void BM_Census(benchmark::State& st) {
  CensusOptions o;
  o.parallel = st.range(0) != 0;
  for (auto _ : st) {
    auto C = census(group(), 0, 0.1, 6.0, o);
    benchmark::DoNotOptimize(C.classes.data());
  }
  st.SetLabel(o.parallel ? "parallel" : "serial");
}

void BM_MuPairs(benchmark::State& st) {
  bool par = st.range(0) != 0;
  for (auto _ : st) benchmark::DoNotOptimize(mu_pairs(group(), Frame(), 1.0, 6.0, 4096, 8, 8, par).tv);
  st.SetLabel(par ? "parallel" : "serial");
}

}  // namespace

BENCHMARK(BM_ExpandFrontier)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HaarQuadrature)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanTimes)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Census)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MuPairs)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
