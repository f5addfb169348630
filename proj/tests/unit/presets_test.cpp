#include "dtnfm/presets.hpp"

#include <cmath>

#include "doctest.h"

using dtnfm::preset_config;
using dtnfm::preset_names;
using dtnfm::SolverConfig;

TEST_CASE("preset table5b carries the published tuning") {
  const auto cfg = preset_config("table5b");
  REQUIRE(cfg.has_value());
  CHECK(cfg->theta == 2);
  CHECK(cfg->group_size == 60);
  CHECK(cfg->patch_size == 6);
  CHECK(cfg->stride == 5);
  CHECK(cfg->solver.max_iters == 10);
  CHECK(cfg->solver.t == 2);
  CHECK(cfg->solver.alpha == 1.80);
  CHECK(cfg->solver.lambda == 1.00);
  CHECK(cfg->solver.rho0 == 0.50);
  CHECK(cfg->solver.mu == 1.002);
  CHECK(cfg->solver.eps ==
        doctest::Approx(1e-4 * std::sqrt(108.0 * 60.0)).epsilon(1e-12));
  CHECK_NOTHROW(cfg->validate());
}

TEST_CASE("the other presets differ where the tuning tables differ") {
  const auto a = preset_config("table5a");
  REQUIRE(a.has_value());
  CHECK(a->theta == 3);
  CHECK(a->solver.lambda == 0.80);
  CHECK(a->solver.rho0 == 0.30);
  CHECK(a->solver.alpha == 1.80);
  CHECK(a->solver.t == 2);

  const auto c = preset_config("table5c");
  REQUIRE(c.has_value());
  CHECK(c->patch_size == 4);
  CHECK(c->stride == 3);
  CHECK(c->solver.alpha == 1.50);
  CHECK(c->solver.rho0 == 0.45);
  CHECK(c->solver.eps ==
        doctest::Approx(1e-4 * std::sqrt(48.0 * 60.0)).epsilon(1e-12));

  const auto d = preset_config("table5d");
  REQUIRE(d.has_value());
  CHECK(d->solver.t == 0);
  CHECK(d->solver.alpha == 2.00);
  CHECK(d->solver.lambda == 2.30);
  CHECK(d->solver.rho0 == 0.90);

  CHECK_FALSE(preset_config("table5z").has_value());
  CHECK(preset_names().size() == 4);
}
