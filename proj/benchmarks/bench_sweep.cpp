// Compares the serial reference sweep against the OpenMP kernel on a small
// but realistic grid.  Build with -DCMAKE_BUILD_TYPE=Release; the two must
// produce identical rows (asserted in the test suite), so the only question
// here is speed.

#include <wiremodel/linksim.hpp>

#include <benchmark/benchmark.h>

namespace wm = wiremodel;

namespace {

wm::SweepGrid small_grid() {
  wm::SweepGrid grid;
  grid.modulations = {wm::ModulationScheme::QPSK};
  grid.antenna_sets = {{1, 1}, {2, 2}, {3, 3}, {4, 4}};
  grid.snr_db = {2.0, 6.0, 10.0, 14.0, 18.0};
  return grid;
}

wm::SweepOptions options(int threads) {
  wm::SweepOptions opt;
  opt.channel = wm::ChannelKind::RayleighBlockFading;
  opt.frames_per_point = 100;
  opt.seed = 1;
  opt.max_threads = threads;
  return opt;
}

void BM_SweepSerial(benchmark::State& state) {
  const wm::SweepGrid grid = small_grid();
  const wm::SweepOptions opt = options(1);
  for (auto _ : state) {
    auto rows = wm::measure_ppl_sweep_serial(grid, opt);
    benchmark::DoNotOptimize(rows);
  }
}
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);

void BM_SweepParallel(benchmark::State& state) {
  const wm::SweepGrid grid = small_grid();
  const wm::SweepOptions opt = options(int(state.range(0)));
  for (auto _ : state) {
    auto rows = wm::measure_ppl_sweep(grid, opt);
    benchmark::DoNotOptimize(rows);
  }
}
BENCHMARK(BM_SweepParallel)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
