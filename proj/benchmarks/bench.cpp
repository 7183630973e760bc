#include <benchmark/benchmark.h>

#include "lgq/gauss_manin.hpp"
#include "lgq/groebner.hpp"
#include "lgq/lg_potential.hpp"
#include "lgq/polytext.hpp"
#include "lgq/quadric_qh.hpp"
#include "lgq/tameness.hpp"

using namespace lgq;

static void BM_CriticalScheme(benchmark::State& state) {
  auto cp = lg::compactify(lg::build_standard_potential(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(lg::critical_scheme(cp).degree);
}
BENCHMARK(BM_CriticalScheme)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_Cyclic3(benchmark::State& state) {
  auto v = make_varset({"x", "y", "z"});
  auto p = make_varset(std::vector<std::string>{});
  std::vector<LaurentPoly> g;
  for (auto s : {"x+y+z", "x*y+y*z+z*x", "x*y*z-1"}) g.push_back(parse_laurent(s, v, p));
  gb::PolyIdeal I(v, p, g, gb::MonomialOrder::lex());
  for (auto _ : state) benchmark::DoNotOptimize(gb::buchberger(I).basis().size());
}
BENCHMARK(BM_Cyclic3);

static void BM_ConnectionMatrices(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    gm::Engine e(n);
    benchmark::DoNotOptimize(e.connection_matrices());
  }
}
BENCHMARK(BM_ConnectionMatrices)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_ReduceSquare(benchmark::State& state) {
  gm::Engine e(1);
  auto g = parse_laurent("D3^2", e.delta_vars(), qh::q_params());
  for (auto _ : state) benchmark::DoNotOptimize(e.reduce_class(g, 8));
}
BENCHMARK(BM_ReduceSquare)->Unit(benchmark::kMillisecond);

static void BM_ParamGcd(benchmark::State& state) {
  auto q = make_varset({"q"});
  auto a = parse_scalar("q^6-1", q);
  auto b = parse_scalar("q^4+q^3-q-1", q);
  for (auto _ : state) benchmark::DoNotOptimize(a / b);
}
BENCHMARK(BM_ParamGcd);

static void BM_MuConstancy(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(tame::mu_constancy_V101({BigRat(1)}).mu_symbolic);
}
BENCHMARK(BM_MuConstancy)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
