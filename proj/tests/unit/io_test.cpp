#include <cstdio>
#include <filesystem>
#include <random>

#include "doctest.h"
#include "dtnfm/errors.hpp"
#include "dtnfm/image_io.hpp"
#include "dtnfm/manifest.hpp"
#include "test_images.hpp"

using dtnfm::ColorImage;
using dtnfm::IoError;
using dtnfm::load_float_image;
using dtnfm::load_image;
using dtnfm::load_png;
using dtnfm::Manifest;
using dtnfm::save_float_image;
using dtnfm::save_png;
namespace dt = dtnfm::testing;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("dtnfm_io_test_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("float container round-trips float32-representable images") {
  TempDir tmp;
  ColorImage img = dt::make_integer_image(19, 23, 5);
  // include negative and fractional float32 values
  img.at(0, 0, 0) = -12.5;
  img.at(1, 2, 1) = 300.25;
  const fs::path file = tmp.path / "a.imgf";
  save_float_image(file, img);
  const ColorImage back = load_float_image(file);
  CHECK(back.data() == img.data());
}

TEST_CASE("float container rejects garbage") {
  TempDir tmp;
  const fs::path file = tmp.path / "bad.imgf";
  {
    std::FILE* f = std::fopen(file.string().c_str(), "wb");
    std::fwrite("JUNKJUNKJUNK", 1, 12, f);
    std::fclose(f);
  }
  CHECK_THROWS_AS(load_float_image(file), IoError);
  CHECK_THROWS_AS(load_float_image(tmp.path / "missing.imgf"), IoError);
}

TEST_CASE("png round-trips integer images") {
  TempDir tmp;
  const ColorImage img = dt::make_integer_image(21, 17, 6);
  const fs::path file = tmp.path / "a.png";
  save_png(file, img);
  const ColorImage back = load_png(file);
  CHECK(back.data() == img.data());
}

TEST_CASE("png save clamps and rounds") {
  TempDir tmp;
  ColorImage img(4, 4, 0.0);
  img.at(0, 0, 0) = -20.0;
  img.at(0, 1, 0) = 270.0;
  img.at(0, 2, 0) = 99.5;
  img.at(0, 3, 0) = 99.49;
  const fs::path file = tmp.path / "c.png";
  save_png(file, img);
  const ColorImage back = load_png(file);
  CHECK(back.at(0, 0, 0) == 0.0);
  CHECK(back.at(0, 1, 0) == 255.0);
  CHECK(back.at(0, 2, 0) == 100.0);
  CHECK(back.at(0, 3, 0) == 99.0);
}

TEST_CASE("load_image dispatches by extension") {
  TempDir tmp;
  const ColorImage img = dt::make_integer_image(9, 9, 1);
  save_float_image(tmp.path / "x.imgf", img);
  save_png(tmp.path / "x.png", img);
  CHECK(load_image(tmp.path / "x.imgf").data() == img.data());
  CHECK(load_image(tmp.path / "x.png").data() == img.data());
  CHECK_THROWS_AS(load_png(tmp.path / "nope.png"), IoError);
}

TEST_CASE("bundled photo crops load") {
  const ColorImage img = dt::load_test_png("photo_face_128.png");
  CHECK(img.height() == 128);
  CHECK(img.width() == 128);
  double mx = 0.0;
  for (double v : img.data()) mx = std::max(mx, v);
  CHECK(mx > 100.0);  // a real photo, not a dark stub
}

TEST_CASE("manifest round-trips exactly, preserving order") {
  TempDir tmp;
  Manifest m;
  m.set("tool", std::string("denoise"));
  m.set("lambda", 1.0 / 3.0);
  m.set("theta", 3);
  m.set("seed", std::uint64_t{18446744073709551615ULL});
  m.set("eps", 8.0498447189992444e-03);

  const fs::path file = tmp.path / "run.manifest";
  m.write(file);
  const Manifest back = Manifest::read(file);
  CHECK(back.entries() == m.entries());
  CHECK(*back.get_double("lambda") == 1.0 / 3.0);
  CHECK(*back.get_double("eps") == 8.0498447189992444e-03);
  CHECK(*back.get_int("theta") == 3);
  CHECK(*back.get("seed") == "18446744073709551615");
  CHECK_FALSE(back.get("absent").has_value());

  // setting an existing key overwrites in place
  Manifest m2 = back;
  m2.set("theta", 5);
  CHECK(*m2.get_int("theta") == 5);
  CHECK(m2.entries().size() == back.entries().size());
}
