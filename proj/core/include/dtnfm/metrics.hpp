#ifndef DTNFM_METRICS_HPP
#define DTNFM_METRICS_HPP

#include <array>

#include "dtnfm/image.hpp"

namespace dtnfm {

struct QualityReport {
  double psnr = 0.0;  // dB; +infinity when the images are identical
  double ssim = 0.0;
  std::array<double, 3> per_channel_psnr{};
};

/// 10*log10(peak^2 / MSE) with the MSE over all H*W*3 entries.
/// Identical images give +infinity.
double psnr(const ColorImage& ref, const ColorImage& test, double peak = 255.0);

std::array<double, 3> per_channel_psnr(const ColorImage& ref,
                                       const ColorImage& test,
                                       double peak = 255.0);

/// Single-scale SSIM: 11×11 Gaussian window (sigma 1.5), K1=0.01, K2=0.03,
/// dynamic range 255, valid-region filtering, computed per channel and
/// averaged over the three channels. Requires min(H,W) >= 11.
double ssim(const ColorImage& ref, const ColorImage& test);

QualityReport quality_report(const ColorImage& ref, const ColorImage& test);

}  // namespace dtnfm

#endif  // DTNFM_METRICS_HPP
