#ifndef DTNFM_NOISE_SYNTH_HPP
#define DTNFM_NOISE_SYNTH_HPP

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <optional>

#include "dtnfm/image.hpp"

namespace dtnfm {

/// Generator identifier recorded in run manifests so outputs can be
/// reproduced: splitmix64 stream per (seed, row), Gaussians by Box-Muller
/// on 53-bit uniforms.
inline constexpr const char* kNoiseRngName = "splitmix64-boxmuller-v1";

/// Synthetic-noise description: per-channel base standard deviations, an
/// optional spatial modulation map in [0,1] matching the image size, and the
/// seed that makes generation reproducible.
struct NoiseSpec {
  std::array<double, 3> sigma0{};
  std::optional<Eigen::MatrixXd> map;
  std::uint64_t seed = 0;

  void validate() const;
};

/// Adds independent zero-mean Gaussian noise with std m(y,x) * sigma0[c] to
/// each pixel (m = 1 without a map). Deterministic given the seed; rows use
/// independent streams so generation parallelizes without changing output.
/// The result is NOT clamped.
ColorImage add_gaussian(const ColorImage& image, const NoiseSpec& spec);

/// The classic two-hump exponential test surface sampled on an n×n uniform
/// grid over [-3,3]^2 (endpoints included), absolute value, normalized so the
/// grid maximum is exactly 1. Entry (i,j) is the value at y_i, x_j.
Eigen::MatrixXd peaks_map(int n);

/// Single RMS noise level for methods that accept one scalar:
/// sqrt((sr^2 + sg^2 + sb^2) / 3).
double equivalent_sigma(const std::array<double, 3>& sigma0);

/// Mean effective noise std in one channel under a modulation map:
/// sigma_c0 * mean(map).
double map_mean_sigma(double sigma_c0, const Eigen::MatrixXd& map);

}  // namespace dtnfm

#endif  // DTNFM_NOISE_SYNTH_HPP
