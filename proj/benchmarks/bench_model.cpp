#include <benchmark/benchmark.h>

#include <vector>

#include "nvmio/commnet.hpp"
#include "nvmio/costmodel.hpp"
#include "nvmio/devices.hpp"
#include "nvmio/workload.hpp"

namespace {

using namespace nvmio;

void BM_CollectiveTime(benchmark::State& state) {
  const auto schedule = TransferSchedule::uniform(256, 16.0, 1.0, 4);
  const auto comm = CommParams::reference();
  const auto& device = builtin_device("NVM");
  for (auto _ : state) {
    benchmark::DoNotOptimize(collective_time(schedule, comm, device));
  }
}
BENCHMARK(BM_CollectiveTime);

void BM_TradeoffSweep(benchmark::State& state) {
  std::vector<double> sizes;
  for (double m = 1.0 / 1024; m <= 64.0; m *= 2) {
    sizes.push_back(m);
  }
  const std::vector<DeviceProfile> devices{builtin_device("HDD"), builtin_device("SSD"),
                                           builtin_device("NVM")};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        tradeoff_sweep(sizes, CommParams::reference(), devices, 0.75, 4));
  }
}
BENCHMARK(BM_TradeoffSweep);

void BM_FitCommParams(benchmark::State& state) {
  std::vector<CalibrationSample> samples;
  for (int i = 0; i < state.range(0); ++i) {
    const double m = 0.5 + i;
    samples.push_back({m, 5.39e-3 + 3.35e-2 * m + 1e-4 * (i % 3)});
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(fit_comm_params(samples));
  }
}
BENCHMARK(BM_FitCommParams)->Arg(4)->Arg(64)->Arg(1024);

}  // namespace
