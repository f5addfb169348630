#include <benchmark/benchmark.h>

#include <random>

#include "dtnfm/admm.hpp"
#include "dtnfm/lowrank_prox.hpp"
#include "dtnfm/metrics.hpp"
#include "dtnfm/noise_synth.hpp"
#include "dtnfm/patch_engine.hpp"
#include "dtnfm/presets.hpp"

namespace {

Eigen::MatrixXd random_matrix(int rows, int cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 50.0);
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = gauss(rng);
  return m;
}

dtnfm::ColorImage noisy_photo(int side) {
  dtnfm::ColorImage img(side, side);
  for (int y = 0; y < side; ++y) {
    for (int x = 0; x < side; ++x) {
      for (int c = 0; c < 3; ++c) {
        img.at(y, x, c) = 128.0 + 60.0 * std::sin(0.3 * x + 0.2 * y + c);
      }
    }
  }
  dtnfm::NoiseSpec spec;
  spec.sigma0 = {30, 10, 50};
  spec.seed = 1;
  return dtnfm::add_gaussian(img, spec);
}

void BM_TnfProx(benchmark::State& state) {
  const Eigen::MatrixXd b = random_matrix(108, 60, 42);
  const dtnfm::SpectralShrinkParams params{1.5, 2, 1.8};
  for (auto _ : state) {
    benchmark::DoNotOptimize(dtnfm::tnf_prox(b, params));
  }
}
BENCHMARK(BM_TnfProx);

void BM_XUpdate(benchmark::State& state) {
  const Eigen::MatrixXd y = random_matrix(108, 60, 1);
  const Eigen::MatrixXd z = random_matrix(108, 60, 2);
  const Eigen::MatrixXd a = random_matrix(108, 60, 3);
  const auto w = dtnfm::DiagonalWeights::identity(108, 60);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dtnfm::x_update(y, z, a, w, 0.7));
  }
}
BENCHMARK(BM_XUpdate);

void BM_SolveGroup(benchmark::State& state) {
  const Eigen::MatrixXd y = random_matrix(108, 60, 7);
  const auto w = dtnfm::DiagonalWeights::identity(108, 60);
  const dtnfm::SolverConfig cfg = dtnfm::preset_config("table5b")->solver;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dtnfm::solve(y, w, cfg));
  }
}
BENCHMARK(BM_SolveGroup);

void BM_GroupSimilar(benchmark::State& state) {
  const dtnfm::ColorImage img = noisy_photo(128);
  dtnfm::PipelineConfig cfg = *dtnfm::preset_config("table5b");
  for (auto _ : state) {
    benchmark::DoNotOptimize(dtnfm::group_similar(img, {60, 60}, cfg));
  }
}
BENCHMARK(BM_GroupSimilar);

void BM_DenoiseCrop(benchmark::State& state) {
  const dtnfm::ColorImage noisy = noisy_photo(static_cast<int>(state.range(0)));
  dtnfm::PipelineConfig cfg = *dtnfm::preset_config("table5b");
  cfg.theta = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dtnfm::denoise(noisy, {30, 10, 50}, cfg));
  }
}
BENCHMARK(BM_DenoiseCrop)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_Ssim(benchmark::State& state) {
  const dtnfm::ColorImage a = noisy_photo(256);
  const dtnfm::ColorImage b = noisy_photo(256);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dtnfm::ssim(a, b));
  }
}
BENCHMARK(BM_Ssim);

}  // namespace

BENCHMARK_MAIN();
