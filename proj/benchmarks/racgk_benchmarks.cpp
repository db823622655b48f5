#include <benchmark/benchmark.h>

#include "racgk/bredon.hpp"
#include "racgk/hermite.hpp"
#include "racgk/ktheory.hpp"
#include "racgk/sampling.hpp"
#include "racgk/smith.hpp"

namespace {

using namespace racgk;

void BM_EnumerateCliquesCycle(benchmark::State& state) {
  const Graph g = Graph::cycle(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_spherical(g));
}
BENCHMARK(BM_EnumerateCliquesCycle)->Arg(8)->Arg(32)->Arg(64);

void BM_EnumerateCliquesComplete(benchmark::State& state) {
  const Graph g = Graph::complete(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_spherical(g));
}
BENCHMARK(BM_EnumerateCliquesComplete)->Arg(6)->Arg(10)->Arg(14);

void BM_BuildBredonComplex(benchmark::State& state) {
  const Graph g = Graph::cycle(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_bredon_complex(g));
}
BENCHMARK(BM_BuildBredonComplex)->Arg(5)->Arg(10)->Arg(20);

void BM_BredonCohomology(benchmark::State& state) {
  const Graph g = Graph::cycle(static_cast<std::size_t>(state.range(0)));
  const auto complex = build_bredon_complex(g).complex;
  for (auto _ : state) benchmark::DoNotOptimize(cohomology(complex));
}
BENCHMARK(BM_BredonCohomology)->Arg(5)->Arg(10)->Arg(20);

void BM_SmithBredonDifferential(benchmark::State& state) {
  const auto complex = build_bredon_complex(Graph::complete(static_cast<std::size_t>(state.range(0)))).complex;
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(complex.differentials[0], SmithTransforms::kNone));
}
BENCHMARK(BM_SmithBredonDifferential)->Arg(2)->Arg(3);

void BM_InverseLimit(benchmark::State& state) {
  const Graph g = Graph::cycle(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(inverse_limit(g));
}
BENCHMARK(BM_InverseLimit)->Arg(5)->Arg(10)->Arg(20);

template <Basis B>
void BM_Multiply(benchmark::State& state) {
  const auto g = std::make_shared<const Graph>(Graph::complete(static_cast<std::size_t>(state.range(0))));
  std::vector<VertexMask> cliques;
  for (const auto& c : enumerate_spherical(*g)) cliques.push_back(c.mask);
  SampleRng rng(7);
  const auto a = random_element(g, B, cliques, rng);
  const auto b = random_element(g, B, cliques, rng);
  for (auto _ : state) benchmark::DoNotOptimize(B == Basis::kStar ? multiply_star(a, b) : multiply_bar(a, b));
}
BENCHMARK(BM_Multiply<Basis::kStar>)->Name("BM_MultiplyStar")->Arg(4)->Arg(8)->Arg(12);
BENCHMARK(BM_Multiply<Basis::kBar>)->Name("BM_MultiplyBar")->Arg(4)->Arg(8)->Arg(12);

void BM_IdealPowers(benchmark::State& state) {
  const auto g = std::make_shared<const Graph>(Graph::cycle(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(ideal_powers(g, 4));
}
BENCHMARK(BM_IdealPowers)->Arg(4)->Arg(6);

void BM_HermiteRandom(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  SampleRng rng(11);
  IntMatrix m(n, n + 2);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = static_cast<long>(rng.below(21)) - 10;
  for (auto _ : state) benchmark::DoNotOptimize(hermite_normal_form(m));
}
BENCHMARK(BM_HermiteRandom)->Arg(8)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
