#ifndef DTNFM_IMAGE_HPP
#define DTNFM_IMAGE_HPP

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace dtnfm {

/// H×W×3 color image, double precision, planar channel storage
/// (full red plane, then green, then blue). Channel order is fixed (r,g,b).
/// Pixel values are nominally on the 8-bit [0,255] scale but are not clamped;
/// noisy and intermediate images carry out-of-range reals.
class ColorImage {
 public:
  static constexpr int kChannels = 3;

  ColorImage() = default;
  ColorImage(int height, int width, double fill = 0.0);

  int height() const { return height_; }
  int width() const { return width_; }
  bool empty() const { return data_.empty(); }
  std::size_t size() const { return data_.size(); }

  double& at(int y, int x, int c) {
    return data_[static_cast<std::size_t>(c) * plane_size() +
                 static_cast<std::size_t>(y) * width_ + x];
  }
  double at(int y, int x, int c) const {
    return data_[static_cast<std::size_t>(c) * plane_size() +
                 static_cast<std::size_t>(y) * width_ + x];
  }

  std::span<double> plane(int c) {
    return {data_.data() + static_cast<std::size_t>(c) * plane_size(),
            plane_size()};
  }
  std::span<const double> plane(int c) const {
    return {data_.data() + static_cast<std::size_t>(c) * plane_size(),
            plane_size()};
  }

  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

  bool same_shape(const ColorImage& other) const {
    return height_ == other.height_ && width_ == other.width_;
  }
  /// Throws InvalidInputError when any entry is not finite.
  void require_finite(const char* what) const;

 private:
  std::size_t plane_size() const {
    return static_cast<std::size_t>(height_) * width_;
  }

  int height_ = 0;
  int width_ = 0;
  std::vector<double> data_;
};

/// Clamp every entry to [0, 255]. Applied once, at final emission.
ColorImage clamp_to_display_range(const ColorImage& image);

/// Round-and-clamp to the 8-bit grid, still stored as doubles. Used for the
/// quantized-metrics cross-check.
ColorImage quantize_to_u8_grid(const ColorImage& image);

}  // namespace dtnfm

#endif  // DTNFM_IMAGE_HPP
