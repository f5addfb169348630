#include "dtnfm/presets.hpp"

namespace dtnfm {

void resolve_solver_eps(PipelineConfig& cfg) {
  cfg.solver.eps = SolverConfig::default_eps(
      3 * cfg.patch_size * cfg.patch_size, cfg.group_size);
}

std::optional<PipelineConfig> preset_config(const std::string& name) {
  PipelineConfig cfg;  // theta=2, N=60, d=6, s=5, window=31, delta=0.1
  cfg.solver.max_iters = 10;
  cfg.solver.mu = 1.002;

  if (name == "table5a") {
    cfg.theta = 3;
    cfg.solver.t = 2;
    cfg.solver.alpha = 1.80;
    cfg.solver.lambda = 0.80;
    cfg.solver.rho0 = 0.30;
  } else if (name == "table5b") {
    cfg.theta = 2;
    cfg.solver.t = 2;
    cfg.solver.alpha = 1.80;
    cfg.solver.lambda = 1.00;
    cfg.solver.rho0 = 0.50;
  } else if (name == "table5c") {
    cfg.patch_size = 4;
    cfg.stride = 3;
    cfg.solver.t = 2;
    cfg.solver.alpha = 1.50;
    cfg.solver.lambda = 0.80;
    cfg.solver.rho0 = 0.45;
  } else if (name == "table5d") {
    cfg.solver.t = 0;
    cfg.solver.alpha = 2.00;
    cfg.solver.lambda = 2.30;
    cfg.solver.rho0 = 0.90;
  } else {
    return std::nullopt;
  }
  resolve_solver_eps(cfg);
  return cfg;
}

std::vector<std::string> preset_names() {
  return {"table5a", "table5b", "table5c", "table5d"};
}

}  // namespace dtnfm
