#include "dtnfm/metrics.hpp"

#include <cmath>
#include <limits>

#include "doctest.h"
#include "dtnfm/errors.hpp"
#include "dtnfm/noise_synth.hpp"
#include "test_images.hpp"

using dtnfm::ColorImage;
using dtnfm::InvalidInputError;
using dtnfm::psnr;
using dtnfm::quality_report;
using dtnfm::ssim;
namespace dt = dtnfm::testing;

TEST_CASE("psnr constant-offset values") {
  const ColorImage ref = dt::make_photo_like(32, 32);
  ColorImage plus1 = ref;
  for (double& v : plus1.data()) v += 1.0;
  ColorImage plus16 = ref;
  for (double& v : plus16.data()) v += 16.0;

  CHECK(psnr(ref, ref) == std::numeric_limits<double>::infinity());
  CHECK(psnr(ref, plus1) == doctest::Approx(48.1308).epsilon(1e-7));
  // MSE = 256: 10*log10(255^2/256) = 48.1308 - 20*log10(16) = 24.0484
  CHECK(psnr(ref, plus16) == doctest::Approx(24.0484).epsilon(1e-6));
  CHECK(psnr(ref, plus16) ==
        doctest::Approx(psnr(ref, plus1) - 20.0 * std::log10(16.0))
            .epsilon(1e-12));
}

TEST_CASE("psnr and ssim are symmetric") {
  const ColorImage a = dt::make_photo_like(32, 32, 1);
  const ColorImage b = dt::make_photo_like(32, 32, 4);
  CHECK(psnr(a, b) == psnr(b, a));
  CHECK(ssim(a, b) == doctest::Approx(ssim(b, a)).epsilon(1e-12));
}

TEST_CASE("dimension mismatch is rejected") {
  const ColorImage a = dt::make_photo_like(32, 32);
  const ColorImage b = dt::make_photo_like(32, 30);
  CHECK_THROWS_AS(psnr(a, b), InvalidInputError);
  CHECK_THROWS_AS(ssim(a, b), InvalidInputError);
}

TEST_CASE("ssim identities and degradations") {
  const ColorImage ref = dt::make_photo_like(48, 48);
  CHECK(ssim(ref, ref) == 1.0);

  ColorImage inverted = ref;
  for (double& v : inverted.data()) v = 255.0 - v;
  CHECK(ssim(ref, inverted) < 1.0);

  // constant images: pure luminance term
  const ColorImage c1(32, 32, 100.0);
  ColorImage c2(32, 32, 110.0);
  const double mu1 = 100.0, mu2 = 110.0;
  const double c1const = (0.01 * 255) * (0.01 * 255);
  const double expected =
      (2 * mu1 * mu2 + c1const) / (mu1 * mu1 + mu2 * mu2 + c1const);
  CHECK(ssim(c1, c2) == doctest::Approx(expected).epsilon(1e-12));

  const ColorImage tiny(8, 8, 1.0);
  CHECK_THROWS_AS(ssim(tiny, tiny), InvalidInputError);
}

TEST_CASE("psnr decreases with the noise level") {
  const ColorImage ref = dt::make_photo_like(64, 64, 2);
  const double levels[] = {5.0, 15.0, 45.0};
  double mean_psnr[3] = {0, 0, 0};
  for (int li = 0; li < 3; ++li) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      dtnfm::NoiseSpec spec;
      spec.sigma0 = {levels[li], levels[li], levels[li]};
      spec.seed = seed;
      mean_psnr[li] += psnr(ref, dtnfm::add_gaussian(ref, spec));
    }
    mean_psnr[li] /= 5.0;
  }
  CHECK(mean_psnr[0] > mean_psnr[1]);
  CHECK(mean_psnr[1] > mean_psnr[2]);
}

TEST_CASE("quality report bundles the three metrics") {
  const ColorImage ref = dt::make_photo_like(32, 32);
  ColorImage test = ref;
  for (int y = 0; y < 32; ++y) {
    for (int x = 0; x < 32; ++x) test.at(y, x, 0) += 4.0;  // red only
  }
  const auto q = quality_report(ref, test);
  CHECK(q.per_channel_psnr[0] < 60.0);
  CHECK(q.per_channel_psnr[1] == std::numeric_limits<double>::infinity());
  CHECK(q.per_channel_psnr[2] == std::numeric_limits<double>::infinity());
  CHECK(q.psnr == doctest::Approx(10.0 * std::log10(255.0 * 255.0 * 3.0 / 16.0)));
  CHECK(q.ssim < 1.0);
}
