#include "dtnfm/noise_synth.hpp"

#include <cmath>
#include <numbers>

#include "dtnfm/errors.hpp"

namespace dtnfm {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Uniform in (0,1]: 53 random bits, shifted off zero.
double uniform_pos(std::uint64_t& state) {
  return (static_cast<double>(splitmix64(state) >> 11) + 1.0) * 0x1p-53;
}

// Uniform in [0,1).
double uniform(std::uint64_t& state) {
  return static_cast<double>(splitmix64(state) >> 11) * 0x1p-53;
}

double gaussian(std::uint64_t& state) {
  const double u1 = uniform_pos(state);
  const double u2 = uniform(state);
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t row_stream_seed(std::uint64_t seed, int row) {
  std::uint64_t s = seed ^ (0x51d2cc5a1a3cbb1dULL +
                            static_cast<std::uint64_t>(row) *
                                0x9e3779b97f4a7c15ULL);
  // Full avalanche over (seed, row); seeding streams with raw linear state
  // makes adjacent rows replay each other's samples with a small shift.
  return splitmix64(s);
}

}  // namespace

void NoiseSpec::validate() const {
  for (double s : sigma0) {
    if (!(s >= 0.0) || !std::isfinite(s)) {
      throw InvalidInputError("noise spec: sigma0 entries must be >= 0");
    }
  }
  if (map.has_value()) {
    if (map->size() == 0) throw InvalidInputError("noise spec: empty map");
    if (!((map->array() >= 0.0).all() && (map->array() <= 1.0).all())) {
      throw InvalidInputError("noise spec: map values must lie in [0,1]");
    }
  }
}

ColorImage add_gaussian(const ColorImage& image, const NoiseSpec& spec) {
  spec.validate();
  if (spec.map.has_value() && (spec.map->rows() != image.height() ||
                               spec.map->cols() != image.width())) {
    throw InvalidInputError("add_gaussian: map shape does not match image");
  }

  ColorImage out = image;
  const int height = image.height();
  const int width = image.width();
  for (int y = 0; y < height; ++y) {
    std::uint64_t state = row_stream_seed(spec.seed, y);
    for (int x = 0; x < width; ++x) {
      const double m = spec.map.has_value() ? (*spec.map)(y, x) : 1.0;
      for (int c = 0; c < ColorImage::kChannels; ++c) {
        // The draw is consumed even at zero std so the stream position is
        // independent of sigma0 and the map.
        const double g = gaussian(state);
        out.at(y, x, c) += g * (m * spec.sigma0[c]);
      }
    }
  }
  return out;
}

Eigen::MatrixXd peaks_map(int n) {
  if (n < 2) throw InvalidInputError("peaks_map: n must be >= 2");
  const auto coord = [n](int i) {
    return -3.0 + 6.0 * static_cast<double>(i) / (n - 1);
  };
  Eigen::MatrixXd map(n, n);
  for (int i = 0; i < n; ++i) {
    const double y = coord(i);
    for (int j = 0; j < n; ++j) {
      const double x = coord(j);
      const double p =
          3.0 * (1.0 - x) * (1.0 - x) * std::exp(-x * x - (y + 1) * (y + 1)) -
          10.0 * (x / 5.0 - x * x * x - std::pow(y, 5)) *
              std::exp(-x * x - y * y) -
          (1.0 / 3.0) * std::exp(-(x + 1) * (x + 1) - y * y);
      map(i, j) = std::abs(p);
    }
  }
  map /= map.maxCoeff();
  return map;
}

double equivalent_sigma(const std::array<double, 3>& sigma0) {
  for (double s : sigma0) {
    if (!(s >= 0.0)) {
      throw InvalidInputError("equivalent_sigma: negative entry");
    }
  }
  return std::sqrt(
      (sigma0[0] * sigma0[0] + sigma0[1] * sigma0[1] + sigma0[2] * sigma0[2]) /
      3.0);
}

double map_mean_sigma(double sigma_c0, const Eigen::MatrixXd& map) {
  if (map.size() == 0) throw InvalidInputError("map_mean_sigma: empty map");
  return sigma_c0 * map.mean();
}

}  // namespace dtnfm
