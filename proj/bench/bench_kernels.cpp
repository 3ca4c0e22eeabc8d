// Serial reference vs OpenMP stencil kernels.
#include <benchmark/benchmark.h>

#include <cmath>

#include "torus/kernels.hpp"
#include "torus/operators.hpp"

using namespace torus;
using kernels::Vec;

namespace {

Vec wave(const Grid& g, double k) {
  Vec f(g.n);
  for (int i = 0; i < g.n; ++i) f[i] = std::polar(1.0, k * g.x(i));
  return f;
}

template <Exec EX>
void BM_apply_sl(benchmark::State& st) {
  const Grid g = Grid::periodic(static_cast<int>(st.range(0)));
  const Vec sigma = wave(g, 1), rho = wave(g, 2), f = wave(g, 3);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::apply_sl(g, sigma, rho, f, Stencil::fourth, EX));
  st.SetItemsProcessed(st.iterations() * g.n);
}

template <Exec EX>
void BM_offdiag(benchmark::State& st) {
  const Grid g = Grid::periodic(static_cast<int>(st.range(0)));
  const Vec m12 = wave(g, 1), m21 = wave(g, 2), p1 = wave(g, 3), p2 = wave(g, 4);
  Vec o1(g.n), o2(g.n);
  for (auto _ : st) {
    kernels::apply_offdiag(g, -2.0, m12, m21, p1, p2, o1, o2, Stencil::fourth, EX);
    benchmark::DoNotOptimize(o1.data());
  }
  st.SetItemsProcessed(st.iterations() * g.n);
}

template <Exec EX>
void BM_norm(benchmark::State& st) {
  const Grid g = Grid::periodic(static_cast<int>(st.range(0)));
  const Vec f = wave(g, 5);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::norm_l2(g, f, EX));
  st.SetItemsProcessed(st.iterations() * g.n);
}

template <Exec EX>
void BM_squaring(benchmark::State& st) {
  const TorusParams p{0.5, 2.0};
  const GaugeField f = GaugeField::linear_au(1.0, 0.2, 1).with_ax(GaugeField::cosine_ax(1.0, 0.3));
  const Grid g = Grid::periodic(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(squaring_defect(p, f, 1, g, 2, 100, 4, Stencil::fourth, EX));
}

}  // namespace

BENCHMARK(BM_apply_sl<Exec::serial>)->RangeMultiplier(4)->Range(1 << 10, 1 << 18);
BENCHMARK(BM_apply_sl<Exec::parallel>)->RangeMultiplier(4)->Range(1 << 10, 1 << 18);
BENCHMARK(BM_offdiag<Exec::serial>)->RangeMultiplier(4)->Range(1 << 10, 1 << 18);
BENCHMARK(BM_offdiag<Exec::parallel>)->RangeMultiplier(4)->Range(1 << 10, 1 << 18);
BENCHMARK(BM_norm<Exec::serial>)->RangeMultiplier(4)->Range(1 << 10, 1 << 18);
BENCHMARK(BM_norm<Exec::parallel>)->RangeMultiplier(4)->Range(1 << 10, 1 << 18);
BENCHMARK(BM_squaring<Exec::serial>)->Arg(1024)->Arg(8192);
BENCHMARK(BM_squaring<Exec::parallel>)->Arg(1024)->Arg(8192);

BENCHMARK_MAIN();
