#include <benchmark/benchmark.h>

#include "nvmio/page_cache.hpp"
#include "nvmio/simulator.hpp"

namespace {

using namespace nvmio;

void BM_SimulateCollective(benchmark::State& state) {
  const auto nodes = static_cast<std::uint32_t>(state.range(0));
  SimConfig cfg{TransferSchedule::uniform(256, 16.0, 1.0, nodes),
                CommParams::reference(),
                builtin_device("SSD"),
                ProcessLayout{nodes, 4, 1},
                Direction::Write,
                0,
                {},
                {}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate_collective(cfg));
  }
  state.SetItemsProcessed(state.iterations() * 256 * nodes);
}
BENCHMARK(BM_SimulateCollective)->Arg(1)->Arg(4)->Arg(32);

void BM_PageCache(benchmark::State& state) {
  const auto trace = generate_trace(TracePattern::ReadWriteMix, 64.0, 4.0, 4, 0);
  const PageCacheConfig cache(static_cast<double>(state.range(0)), 4.0);
  const auto& memory = builtin_profiles().memory;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        simulate_page_cache(trace, cache, builtin_device("HDD"), memory));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(trace.accesses.size()));
}
BENCHMARK(BM_PageCache)->Arg(8)->Arg(96);

}  // namespace
