#include <benchmark/benchmark.h>

#include "courant/bialgebra.hpp"
#include "courant/calc/text.hpp"
#include "courant/courant.hpp"

using namespace courant;

namespace {

CourantDouble double_of(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  const auto c = make_chart(names);
  return CourantDouble(Bialgebroid::from_poisson(parse_multivector("x1 d/dx1^d/dx2", c)));
}

LieBialgebra sl2() {
  LieBialgebra b(3);
  b.set_c(0, 1, 1, 2);
  b.set_c(0, 2, 2, -2);
  b.set_c(1, 2, 0, 1);
  b.set_f(0, 1, 1, -1);
  b.set_f(0, 2, 2, -1);
  return b;
}

void axiom_sweep(benchmark::State& state, Execution mode) {
  const CourantDouble e = double_of(static_cast<std::size_t>(state.range(0)));
  const auto samples = default_samples(e);
  for (auto _ : state) benchmark::DoNotOptimize(verify_courant_axioms(e, samples, mode));
}

void graph_search(benchmark::State& state, Execution mode) {
  const auto d = build_double(sl2());
  std::vector<Rational> grid;
  for (long k = -state.range(0); k <= state.range(0); ++k) grid.emplace_back(k);
  for (auto _ : state) benchmark::DoNotOptimize(search_dirac_graphs(d, 3, grid, mode));
}

}  // namespace

BENCHMARK_CAPTURE(axiom_sweep, serial, Execution::Serial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(axiom_sweep, parallel, Execution::Parallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(graph_search, serial, Execution::Serial)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(graph_search, parallel, Execution::Parallel)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
