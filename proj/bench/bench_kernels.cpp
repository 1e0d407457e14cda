// OpenMP law kernels against the serial reference loops, plus table construction.
//   ./qlat_bench --benchmark_filter=Modular

#include <benchmark/benchmark.h>

#include "qlat/generators.hpp"
#include "qlat/props.hpp"

namespace {

using namespace qlat;

const FiniteLattice& boolean(unsigned n) {
  static const FiniteLattice lattices[] = {gen::boolean_lattice(6), gen::boolean_lattice(8), gen::boolean_lattice(10)};
  return lattices[(n - 6) / 2];
}

const FiniteLattice& projective() {
  static const FiniteLattice F = gen::subspace_lattice({4, 3});
  return F;
}

template <LawReport (*Check)(const FiniteLattice&)>
void on_boolean(benchmark::State& state) {
  const auto& L = boolean(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Check(L));
  state.counters["elements"] = static_cast<double>(L.size());
}

template <LawReport (*Check)(const FiniteLattice&)>
void on_projective(benchmark::State& state) {
  const auto& L = projective();
  for (auto _ : state) benchmark::DoNotOptimize(Check(L));
  state.counters["elements"] = static_cast<double>(L.size());
}

LawReport perspective_omp(const FiniteLattice& L) { return props::is_perspective_lattice(L); }
LawReport perspective_ref(const FiniteLattice& L) { return reference::is_perspective_lattice(L); }

void build_boolean(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gen::boolean_lattice(static_cast<unsigned>(state.range(0))));
}

void build_subspace(benchmark::State& state) {
  const auto q = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gen::subspace_lattice({4, q}));
}

}  // namespace

BENCHMARK(on_boolean<props::is_distributive>)->Name("Distributive/omp")->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(on_boolean<reference::is_distributive>)->Name("Distributive/serial")->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(on_boolean<props::is_modular>)->Name("Modular/omp")->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(on_boolean<reference::is_modular>)->Name("Modular/serial")->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(on_boolean<props::satisfies_height_law>)->Name("HeightLaw/omp")->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(on_boolean<reference::satisfies_height_law>)->Name("HeightLaw/serial")->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(on_boolean<props::check_lattice_axioms>)->Name("Axioms/omp")->DenseRange(6, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(on_boolean<reference::check_lattice_axioms>)->Name("Axioms/serial")->DenseRange(6, 8, 2)->Unit(benchmark::kMillisecond);

BENCHMARK(on_projective<props::is_modular>)->Name("Modular/omp/V(4,3)")->Unit(benchmark::kMillisecond);
BENCHMARK(on_projective<reference::is_modular>)->Name("Modular/serial/V(4,3)")->Unit(benchmark::kMillisecond);
BENCHMARK(on_projective<perspective_omp>)->Name("Perspective/omp/V(4,3)")->Unit(benchmark::kMillisecond);
BENCHMARK(on_projective<perspective_ref>)->Name("Perspective/serial/V(4,3)")->Unit(benchmark::kMillisecond);
BENCHMARK(on_projective<props::is_complemented>)->Name("Complemented/omp/V(4,3)")->Unit(benchmark::kMillisecond);
BENCHMARK(on_projective<reference::is_complemented>)->Name("Complemented/serial/V(4,3)")->Unit(benchmark::kMillisecond);

BENCHMARK(build_boolean)->Name("Build/boolean")->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(build_subspace)->Name("Build/subspace-4")->Arg(2)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
