// Serial reference kernels against their OpenMP counterparts.
//
//   bench_kernels --benchmark_filter=KLFill

#include <benchmark/benchmark.h>

#include "affhecke/cell_modules.hpp"
#include "affhecke/cells.hpp"

using namespace affhecke;

namespace {

ExecMode mode_of(const benchmark::State& st) { return st.range(0) == 0 ? ExecMode::Serial : ExecMode::Parallel; }

void BM_KLFill(benchmark::State& st) {
  const auto ball = enumerate_ball(3, static_cast<int>(st.range(1)), full_mask(3));
  for (auto _ : st) {
    KLTable t(3);
    t.fill(ball, mode_of(st));
    benchmark::DoNotOptimize(t.row_count());
  }
  st.SetLabel(st.range(0) == 0 ? "serial" : "parallel");
  st.counters["rows"] = static_cast<double>(ball.size());
}

void BM_MuGraph(benchmark::State& st) {
  KLTable t(3);
  CPrimeAlgebra alg(t);
  const Ball ball = Ball::affine(t, static_cast<int>(st.range(1)));
  for (auto _ : st) {
    const MuGraph g = mu_graph(ball, alg, mode_of(st));
    benchmark::DoNotOptimize(g.left.size());
  }
  st.SetLabel(st.range(0) == 0 ? "serial" : "parallel");
}

void BM_Cells(benchmark::State& st) {
  KLTable t(4);
  CPrimeAlgebra alg(t);
  const Ball ball = Ball::finite_group(t);
  for (auto _ : st) {
    const CellData cd = cells_in_ball(ball, alg, {true, mode_of(st)});
    benchmark::DoNotOptimize(cd.two_sided_classes.size());
  }
  st.SetLabel(st.range(0) == 0 ? "serial" : "parallel");
}

void BM_Membership(benchmark::State& st) {
  KLTable t(4);
  CPrimeAlgebra alg(t);
  const ElemId v = t.id(AffPerm::parse(4, "s1.s3"));
  const CVec target = cvec_scaled(CPrimeAlgebra::basis(t.id(AffPerm::parse(4, "s1.s2.s1"))), LaurentInt::v_plus_vinv());
  for (auto _ : st) {
    const MembershipEvidence ev = ideal_membership_evidence(alg, target, v, static_cast<int>(st.range(1)), mode_of(st), false);
    benchmark::DoNotOptimize(ev.generators);
  }
  st.SetLabel(st.range(0) == 0 ? "serial" : "parallel");
}

}  // namespace

BENCHMARK(BM_KLFill)->ArgsProduct({{0, 1}, {6, 8}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MuGraph)->ArgsProduct({{0, 1}, {6}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Cells)->ArgsProduct({{0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Membership)->ArgsProduct({{0, 1}, {2}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
