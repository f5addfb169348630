#ifndef DTNFM_IMAGE_IO_HPP
#define DTNFM_IMAGE_IO_HPP

#include <filesystem>

#include "dtnfm/image.hpp"

namespace dtnfm {

/// 8-bit RGB PNG. Loading promotes samples to doubles on the [0,255] scale;
/// saving rounds half away from zero and clamps.
ColorImage load_png(const std::filesystem::path& path);
void save_png(const std::filesystem::path& path, const ColorImage& image);

/// Exact float container (.imgf): magic "IMGF", then little-endian uint32
/// height, width, channels (= 3), then float32 samples in row-major
/// interleaved order ((y*W + x)*3 + c).
ColorImage load_float_image(const std::filesystem::path& path);
void save_float_image(const std::filesystem::path& path,
                      const ColorImage& image);

/// Dispatches on extension: ".imgf" loads the float container, everything
/// else is treated as PNG.
ColorImage load_image(const std::filesystem::path& path);

}  // namespace dtnfm

#endif  // DTNFM_IMAGE_IO_HPP
