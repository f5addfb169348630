// Drives the installed CLI binary end to end: exit codes, file outputs,
// manifest contents, CSV structure, and the reproduce-from-manifest contract.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "dtnfm/image_io.hpp"
#include "dtnfm/manifest.hpp"
#include "test_images.hpp"

namespace fs = std::filesystem;
namespace dt = dtnfm::testing;

namespace {

const char* cli_path() { return DTNFM_CLI_PATH; }

int run_cli(const std::string& args) {
  const std::string cmd = std::string(cli_path()) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::vector<char> slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::string> read_lines(const fs::path& p) {
  std::ifstream in(p);
  REQUIRE(in.good());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("dtnfm_cli_test_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const char* name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("synth is deterministic and honors zero noise") {
  TempDir tmp;
  const fs::path clean = dt::test_data_dir() / "photo_face_64.png";

  const std::string base = "synth --in " + clean.string() + " --sigma 20,35,5 --seed 7";
  CHECK(run_cli(base + " --out " + tmp.file("a.imgf") + " --png " +
                tmp.file("a.png") + " --manifest " + tmp.file("a.manifest")) == 0);
  CHECK(run_cli(base + " --out " + tmp.file("b.imgf") + " --png " +
                tmp.file("b.png") + " --manifest " + tmp.file("b.manifest")) == 0);
  CHECK(slurp(tmp.file("a.imgf")) == slurp(tmp.file("b.imgf")));

  CHECK(run_cli("synth --in " + clean.string() + " --sigma 0,0,0 --out " +
                tmp.file("z.imgf") + " --png " + tmp.file("z.png") +
                " --manifest " + tmp.file("z.manifest")) == 0);
  const dtnfm::ColorImage zero_noise =
      dtnfm::load_float_image(tmp.file("z.imgf"));
  const dtnfm::ColorImage original = dtnfm::load_png(clean);
  CHECK(zero_noise.data() == original.data());

  const dtnfm::Manifest m = dtnfm::Manifest::read(tmp.file("a.manifest"));
  CHECK(*m.get("rng") == "splitmix64-boxmuller-v1");
  CHECK(*m.get("map") == "none");
  CHECK(*m.get_int("seed") == 7);
}

TEST_CASE("synth with the peaks map records the effective sigmas") {
  TempDir tmp;
  const fs::path clean = dt::test_data_dir() / "photo_face_128.png";
  CHECK(run_cli("synth --in " + clean.string() +
                " --sigma 30,35,40 --map peaks --seed 3 --out " +
                tmp.file("n.imgf") + " --png " + tmp.file("n.png") +
                " --manifest " + tmp.file("n.manifest")) == 0);
  const dtnfm::Manifest m = dtnfm::Manifest::read(tmp.file("n.manifest"));
  const double mean = *m.get_double("map_mean");
  CHECK(mean > 0.0);
  CHECK(mean < 1.0);
  CHECK(*m.get_double("sigma_eff_r") == doctest::Approx(30.0 * mean));
  CHECK(*m.get_double("sigma_eff_g") == doctest::Approx(35.0 * mean));
  CHECK(*m.get_double("sigma_eff_b") == doctest::Approx(40.0 * mean));
}

TEST_CASE("denoise with preset table5b writes outputs and a full manifest") {
  TempDir tmp;
  const fs::path clean = dt::test_data_dir() / "photo_face_64.png";
  REQUIRE(run_cli("synth --in " + clean.string() +
                  " --sigma 30,10,50 --seed 11 --out " + tmp.file("noisy.imgf") +
                  " --png " + tmp.file("noisy.png") + " --manifest " +
                  tmp.file("noisy.manifest")) == 0);

  CHECK(run_cli("denoise --in " + tmp.file("noisy.imgf") +
                " --sigma 30,10,50 --preset table5b --ref " + clean.string() +
                " --out " + tmp.file("out.png") + " --float-out " +
                tmp.file("out.imgf") + " --manifest " +
                tmp.file("out.manifest")) == 0);

  CHECK(fs::exists(tmp.file("out.png")));
  CHECK(fs::exists(tmp.file("out.imgf")));

  const dtnfm::Manifest m = dtnfm::Manifest::read(tmp.file("out.manifest"));
  CHECK(*m.get_int("theta") == 2);
  CHECK(*m.get_int("group_size") == 60);
  CHECK(*m.get_int("patch_size") == 6);
  CHECK(*m.get_int("stride") == 5);
  CHECK(*m.get_int("max_iters") == 10);
  CHECK(*m.get_int("t") == 2);
  CHECK(*m.get_double("alpha") == 1.80);
  CHECK(*m.get_double("lambda") == 1.00);
  CHECK(*m.get_double("rho0") == 0.50);
  CHECK(*m.get_double("mu") == 1.002);
  CHECK(*m.get("ablation") == "full");
  CHECK(m.get_double("time_total_s").has_value());

  // denoising a noisy image must help
  CHECK(*m.get_double("denoised_psnr") > *m.get_double("noisy_psnr"));
  CHECK(m.get_double("denoised_psnr_u8").has_value());

  // the manifest reproduces the run bit-for-bit
  CHECK(run_cli("denoise --in " + tmp.file("noisy.imgf") +
                " --sigma 30,10,50 --config " + tmp.file("out.manifest") +
                " --out " + tmp.file("out2.png") + " --float-out " +
                tmp.file("out2.imgf") + " --manifest " +
                tmp.file("out2.manifest")) == 0);
  CHECK(slurp(tmp.file("out.imgf")) == slurp(tmp.file("out2.imgf")));
}

TEST_CASE("denoise ablation flag selects the variant") {
  TempDir tmp;
  const fs::path clean = dt::test_data_dir() / "photo_face_64.png";
  CHECK(run_cli("denoise --in " + clean.string() +
                " --sigma 10,10,10 --ablation drop_C --group-size 12 "
                "--patch-size 4 --stride 3 --out " + tmp.file("o.png") +
                " --float-out " + tmp.file("o.imgf") + " --manifest " +
                tmp.file("o.manifest")) == 0);
  const dtnfm::Manifest m = dtnfm::Manifest::read(tmp.file("o.manifest"));
  CHECK(*m.get("ablation") == "drop_C");
}

TEST_CASE("error exit codes") {
  TempDir tmp;
  // unreadable input
  CHECK(run_cli("denoise --in " + tmp.file("missing.png") +
                " --sigma 10,10,10") == 2);
  // invalid config: unknown preset / bad sigma / even window
  const fs::path clean = dt::test_data_dir() / "photo_face_64.png";
  CHECK(run_cli("denoise --in " + clean.string() +
                " --sigma 10,10,10 --preset table9z") == 3);
  CHECK(run_cli("denoise --in " + clean.string() + " --sigma oops") == 3);
  CHECK(run_cli("denoise --in " + clean.string() +
                " --sigma 10,10,10 --window 14") == 3);
  // missing required flags is a parse error
  CHECK(run_cli("denoise") == 3);
  // bench on an empty directory
  fs::create_directories(tmp.path / "empty");
  CHECK(run_cli("bench --clean-dir " + (tmp.path / "empty").string() +
                " --sigma 10,10,10 --report " + tmp.file("r.csv")) == 2);
}

TEST_CASE("bench produces the versioned CSV with an average row") {
  TempDir tmp;
  fs::create_directories(tmp.path / "set");
  fs::copy_file(dt::test_data_dir() / "photo_face_64.png",
                tmp.path / "set" / "crop.png");

  SUBCASE("degenerate zero-noise run reports the inf sentinel") {
    CHECK(run_cli("bench --clean-dir " + (tmp.path / "set").string() +
                  " --sigma 0,0,0 --group-size 12 --patch-size 4 --stride 3 "
                  "--max-iters 3 --report " + tmp.file("r.csv")) == 0);
    const auto lines = read_lines(tmp.file("r.csv"));
    REQUIRE(lines.size() >= 8);
    CHECK(lines[0] == "# dtnfm-bench-csv v1");
    bool has_equivalent = false;
    for (const auto& l : lines) {
      if (l.rfind("# equivalent_sigma=", 0) == 0) has_equivalent = true;
    }
    CHECK(has_equivalent);
    CHECK(lines[5] ==
          "image,variant,noisy_psnr,noisy_ssim,denoised_psnr,denoised_ssim,"
          "runtime_s");
    CHECK(lines[6].rfind("crop,full,inf,", 0) == 0);
    CHECK(lines[7].rfind("average,full,inf,", 0) == 0);
    CHECK(fs::exists(tmp.file("r.manifest")));
  }

  SUBCASE("ablation sweep emits three variants per image") {
    CHECK(run_cli("bench --clean-dir " + (tmp.path / "set").string() +
                  " --sigma 30,10,50 --seed 5 --group-size 12 --patch-size 4 "
                  "--stride 3 --max-iters 3 --ablation-sweep --report " +
                  tmp.file("s.csv")) == 0);
    const auto lines = read_lines(tmp.file("s.csv"));
    int full = 0, drop_c = 0, drop_s = 0, average = 0;
    for (const auto& l : lines) {
      if (l.rfind("crop,full,", 0) == 0) ++full;
      if (l.rfind("crop,drop_C,", 0) == 0) ++drop_c;
      if (l.rfind("crop,drop_S,", 0) == 0) ++drop_s;
      if (l.rfind("average,", 0) == 0) ++average;
    }
    CHECK(full == 1);
    CHECK(drop_c == 1);
    CHECK(drop_s == 1);
    CHECK(average == 3);
  }
}
