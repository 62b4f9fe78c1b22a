// Serial versus OpenMP kernels on a scaled grid model: L locations in a
// chain, N identities free to move anywhere, one two-valued switch.

#include <benchmark/benchmark.h>

#include <sstream>

#include "insider/format.hpp"
#include "insider/kripke.hpp"

using namespace insider;

namespace {

Model grid_model(int locations, int identities) {
  std::ostringstream s;
  s << "[model]\ngrid\n\n[locations]\n";
  for (int l = 0; l < locations; ++l) s << "l" << l << " " << l << "\n";
  s << "\n[identities]\n";
  for (int i = 0; i < identities; ++i) s << "i" << i << "\n";
  s << "\n[edges]\n";
  for (int l = 1; l < locations; ++l) s << "l" << l << " -> l" << l - 1 << "\n";
  s << "\n[placements]\nl0 =";
  for (int i = 0; i < identities; ++i) s << " i" << i;
  s << "\n\n[location_values]\nl0 = off\n\n[value_alphabets]\nl0 = off on\n\n[policies grid]\n";
  for (int l = 0; l < locations; ++l) s << "l" << l << " : true -> {move}\n";
  s << "l0 : at(l" << locations - 1 << ") -> {put}\n";
  s << "\n[active]\ngrid\n\n[predicates]\non := isin(l0, on)\n";
  return parse_model(s.str());
}

void reach(benchmark::State& state, Exec exec) {
  const Model m = grid_model(5, static_cast<int>(state.range(0)));
  ReachOptions o;
  o.exec = exec;
  std::size_t n = 0;
  for (auto _ : state) {
    const KripkeModel k = reachable(m, o);
    n = k.size();
    benchmark::DoNotOptimize(n);
  }
  state.counters["states"] = static_cast<double>(n);
}

using PreFn = StateSet (*)(const KripkeModel&, const StateSet&, Exec);

void pre(benchmark::State& state, PreFn fn, Exec exec) {
  const Model m = grid_model(5, static_cast<int>(state.range(0)));
  const KripkeModel k = reachable(m);
  StateSet z(k.size(), false);
  for (std::size_t i = 0; i < k.size(); i += 3) z.insert(i);
  for (auto _ : state) benchmark::DoNotOptimize(fn(k, z, exec));
  state.counters["states"] = static_cast<double>(k.size());
}

}  // namespace

BENCHMARK_CAPTURE(reach, serial, Exec::serial)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(reach, parallel, Exec::parallel)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(pre, exists_serial, pre_exists, Exec::serial)->DenseRange(4, 6);
BENCHMARK_CAPTURE(pre, exists_parallel, pre_exists, Exec::parallel)->DenseRange(4, 6);
BENCHMARK_CAPTURE(pre, forall_serial, pre_forall, Exec::serial)->DenseRange(4, 6);
BENCHMARK_CAPTURE(pre, forall_parallel, pre_forall, Exec::parallel)->DenseRange(4, 6);

BENCHMARK_MAIN();
