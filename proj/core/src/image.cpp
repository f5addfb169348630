#include "dtnfm/image.hpp"

#include <algorithm>
#include <cmath>

#include "dtnfm/errors.hpp"

namespace dtnfm {

ColorImage::ColorImage(int height, int width, double fill)
    : height_(height), width_(width) {
  if (height <= 0 || width <= 0) {
    throw InvalidInputError("image dimensions must be positive");
  }
  data_.assign(static_cast<std::size_t>(height) * width * kChannels, fill);
}

void ColorImage::require_finite(const char* what) const {
  for (double v : data_) {
    if (!std::isfinite(v)) {
      throw InvalidInputError(std::string(what) + ": non-finite pixel value");
    }
  }
}

ColorImage clamp_to_display_range(const ColorImage& image) {
  ColorImage out = image;
  for (double& v : out.data()) v = std::clamp(v, 0.0, 255.0);
  return out;
}

ColorImage quantize_to_u8_grid(const ColorImage& image) {
  ColorImage out = image;
  for (double& v : out.data()) {
    v = std::clamp(std::floor(v + 0.5), 0.0, 255.0);
  }
  return out;
}

}  // namespace dtnfm
