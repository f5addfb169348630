#include "dtnfm/metrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "dtnfm/errors.hpp"

namespace dtnfm {

namespace {

constexpr int kWindow = 11;
constexpr double kWindowSigma = 1.5;
constexpr double kK1 = 0.01;
constexpr double kK2 = 0.03;
constexpr double kDynamicRange = 255.0;

void check_pair(const ColorImage& ref, const ColorImage& test) {
  if (!ref.same_shape(test)) {
    throw InvalidInputError("metrics: image dimensions differ");
  }
  if (ref.empty()) throw InvalidInputError("metrics: empty image");
}

std::array<double, kWindow> gaussian_kernel() {
  std::array<double, kWindow> k{};
  double total = 0.0;
  for (int i = 0; i < kWindow; ++i) {
    const double x = i - (kWindow - 1) / 2.0;
    k[i] = std::exp(-x * x / (2.0 * kWindowSigma * kWindowSigma));
    total += k[i];
  }
  for (double& v : k) v /= total;
  return k;
}

// Separable valid-mode filtering: output is (h-10)×(w-10).
std::vector<double> filter_valid(const std::vector<double>& in, int h, int w,
                                 const std::array<double, kWindow>& k) {
  const int wv = w - kWindow + 1;
  const int hv = h - kWindow + 1;
  std::vector<double> horiz(static_cast<std::size_t>(h) * wv);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < wv; ++x) {
      double acc = 0.0;
      for (int i = 0; i < kWindow; ++i) {
        acc += k[i] * in[static_cast<std::size_t>(y) * w + x + i];
      }
      horiz[static_cast<std::size_t>(y) * wv + x] = acc;
    }
  }
  std::vector<double> out(static_cast<std::size_t>(hv) * wv);
  for (int y = 0; y < hv; ++y) {
    for (int x = 0; x < wv; ++x) {
      double acc = 0.0;
      for (int i = 0; i < kWindow; ++i) {
        acc += k[i] * horiz[static_cast<std::size_t>(y + i) * wv + x];
      }
      out[static_cast<std::size_t>(y) * wv + x] = acc;
    }
  }
  return out;
}

double channel_ssim(std::span<const double> ref, std::span<const double> test,
                    int h, int w, const std::array<double, kWindow>& kernel) {
  const std::size_t n = ref.size();
  std::vector<double> x(ref.begin(), ref.end());
  std::vector<double> y(test.begin(), test.end());
  std::vector<double> xx(n), yy(n), xy(n);
  for (std::size_t i = 0; i < n; ++i) {
    xx[i] = x[i] * x[i];
    yy[i] = y[i] * y[i];
    xy[i] = x[i] * y[i];
  }

  const std::vector<double> mu1 = filter_valid(x, h, w, kernel);
  const std::vector<double> mu2 = filter_valid(y, h, w, kernel);
  const std::vector<double> sxx = filter_valid(xx, h, w, kernel);
  const std::vector<double> syy = filter_valid(yy, h, w, kernel);
  const std::vector<double> sxy = filter_valid(xy, h, w, kernel);

  const double c1 = (kK1 * kDynamicRange) * (kK1 * kDynamicRange);
  const double c2 = (kK2 * kDynamicRange) * (kK2 * kDynamicRange);

  double total = 0.0;
  for (std::size_t i = 0; i < mu1.size(); ++i) {
    const double m1 = mu1[i];
    const double m2 = mu2[i];
    const double var1 = sxx[i] - m1 * m1;
    const double var2 = syy[i] - m2 * m2;
    const double cov = sxy[i] - m1 * m2;
    total += ((2.0 * m1 * m2 + c1) * (2.0 * cov + c2)) /
             ((m1 * m1 + m2 * m2 + c1) * (var1 + var2 + c2));
  }
  return total / static_cast<double>(mu1.size());
}

}  // namespace

double psnr(const ColorImage& ref, const ColorImage& test, double peak) {
  check_pair(ref, test);
  double se = 0.0;
  const std::vector<double>& a = ref.data();
  const std::vector<double>& b = test.data();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    se += d * d;
  }
  if (se == 0.0) return std::numeric_limits<double>::infinity();
  const double mse = se / static_cast<double>(a.size());
  return 10.0 * std::log10(peak * peak / mse);
}

std::array<double, 3> per_channel_psnr(const ColorImage& ref,
                                       const ColorImage& test, double peak) {
  check_pair(ref, test);
  std::array<double, 3> out{};
  for (int c = 0; c < ColorImage::kChannels; ++c) {
    std::span<const double> a = ref.plane(c);
    std::span<const double> b = test.plane(c);
    double se = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const double d = a[i] - b[i];
      se += d * d;
    }
    out[c] = se == 0.0
                 ? std::numeric_limits<double>::infinity()
                 : 10.0 * std::log10(peak * peak /
                                     (se / static_cast<double>(a.size())));
  }
  return out;
}

double ssim(const ColorImage& ref, const ColorImage& test) {
  check_pair(ref, test);
  if (std::min(ref.height(), ref.width()) < kWindow) {
    throw InvalidInputError("ssim: image smaller than the 11x11 window");
  }
  static const std::array<double, kWindow> kernel = gaussian_kernel();
  double total = 0.0;
  for (int c = 0; c < ColorImage::kChannels; ++c) {
    total += channel_ssim(ref.plane(c), test.plane(c), ref.height(),
                          ref.width(), kernel);
  }
  return total / ColorImage::kChannels;
}

QualityReport quality_report(const ColorImage& ref, const ColorImage& test) {
  return {psnr(ref, test), ssim(ref, test), per_channel_psnr(ref, test)};
}

}  // namespace dtnfm
