#include "dtnfm/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

#include "dtnfm/errors.hpp"

namespace dtnfm {

namespace {

constexpr char kFloatMagic[4] = {'I', 'M', 'G', 'F'};

std::uint32_t read_u32_le(std::istream& in) {
  unsigned char b[4];
  in.read(reinterpret_cast<char*>(b), 4);
  return static_cast<std::uint32_t>(b[0]) |
         (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) |
         (static_cast<std::uint32_t>(b[3]) << 24);
}

void write_u32_le(std::ostream& out, std::uint32_t v) {
  const unsigned char b[4] = {
      static_cast<unsigned char>(v & 0xff),
      static_cast<unsigned char>((v >> 8) & 0xff),
      static_cast<unsigned char>((v >> 16) & 0xff),
      static_cast<unsigned char>((v >> 24) & 0xff)};
  out.write(reinterpret_cast<const char*>(b), 4);
}

}  // namespace

ColorImage load_png(const std::filesystem::path& path) {
  png_image png{};
  png.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_file(&png, path.string().c_str())) {
    throw IoError("cannot read PNG " + path.string() + ": " + png.message);
  }
  png.format = PNG_FORMAT_RGB;
  std::vector<unsigned char> buffer(PNG_IMAGE_SIZE(png));
  if (!png_image_finish_read(&png, nullptr, buffer.data(), 0, nullptr)) {
    const std::string msg = png.message;
    png_image_free(&png);
    throw IoError("cannot decode PNG " + path.string() + ": " + msg);
  }

  ColorImage image(static_cast<int>(png.height), static_cast<int>(png.width));
  const int h = image.height();
  const int w = image.width();
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const unsigned char* px =
          buffer.data() + (static_cast<std::size_t>(y) * w + x) * 3;
      for (int c = 0; c < 3; ++c) {
        image.at(y, x, c) = static_cast<double>(px[c]);
      }
    }
  }
  return image;
}

void save_png(const std::filesystem::path& path, const ColorImage& image) {
  if (image.empty()) throw InvalidInputError("save_png: empty image");
  const int h = image.height();
  const int w = image.width();
  std::vector<unsigned char> buffer(static_cast<std::size_t>(h) * w * 3);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      unsigned char* px =
          buffer.data() + (static_cast<std::size_t>(y) * w + x) * 3;
      for (int c = 0; c < 3; ++c) {
        const double v =
            std::clamp(std::floor(image.at(y, x, c) + 0.5), 0.0, 255.0);
        px[c] = static_cast<unsigned char>(v);
      }
    }
  }

  png_image png{};
  png.version = PNG_IMAGE_VERSION;
  png.width = static_cast<png_uint_32>(w);
  png.height = static_cast<png_uint_32>(h);
  png.format = PNG_FORMAT_RGB;
  if (!png_image_write_to_file(&png, path.string().c_str(), 0, buffer.data(),
                               0, nullptr)) {
    throw IoError("cannot write PNG " + path.string() + ": " + png.message);
  }
}

ColorImage load_float_image(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, kFloatMagic, 4) != 0) {
    throw IoError("not a float image container: " + path.string());
  }
  const std::uint32_t height = read_u32_le(in);
  const std::uint32_t width = read_u32_le(in);
  const std::uint32_t channels = read_u32_le(in);
  if (!in || channels != 3 || height == 0 || width == 0 ||
      height > (1u << 20) || width > (1u << 20)) {
    throw IoError("bad float image header: " + path.string());
  }

  std::vector<float> samples(static_cast<std::size_t>(height) * width * 3);
  in.read(reinterpret_cast<char*>(samples.data()),
          static_cast<std::streamsize>(samples.size() * sizeof(float)));
  if (!in) throw IoError("truncated float image: " + path.string());

  ColorImage image(static_cast<int>(height), static_cast<int>(width));
  for (int y = 0; y < image.height(); ++y) {
    for (int x = 0; x < image.width(); ++x) {
      const float* px =
          samples.data() + (static_cast<std::size_t>(y) * width + x) * 3;
      for (int c = 0; c < 3; ++c) {
        image.at(y, x, c) = static_cast<double>(px[c]);
      }
    }
  }
  return image;
}

void save_float_image(const std::filesystem::path& path,
                      const ColorImage& image) {
  if (image.empty()) throw InvalidInputError("save_float_image: empty image");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(kFloatMagic, 4);
  write_u32_le(out, static_cast<std::uint32_t>(image.height()));
  write_u32_le(out, static_cast<std::uint32_t>(image.width()));
  write_u32_le(out, 3);

  std::vector<float> samples(
      static_cast<std::size_t>(image.height()) * image.width() * 3);
  for (int y = 0; y < image.height(); ++y) {
    for (int x = 0; x < image.width(); ++x) {
      float* px = samples.data() +
                  (static_cast<std::size_t>(y) * image.width() + x) * 3;
      for (int c = 0; c < 3; ++c) {
        px[c] = static_cast<float>(image.at(y, x, c));
      }
    }
  }
  out.write(reinterpret_cast<const char*>(samples.data()),
            static_cast<std::streamsize>(samples.size() * sizeof(float)));
  if (!out) throw IoError("failed writing " + path.string());
}

ColorImage load_image(const std::filesystem::path& path) {
  if (path.extension() == ".imgf") return load_float_image(path);
  return load_png(path);
}

}  // namespace dtnfm
