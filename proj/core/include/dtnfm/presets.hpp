#ifndef DTNFM_PRESETS_HPP
#define DTNFM_PRESETS_HPP

#include <optional>
#include <string>
#include <vector>

#include "dtnfm/patch_engine.hpp"

namespace dtnfm {

/// Built-in tuning presets for the four noise regimes the method ships with:
///   table5a — spatially invariant noise around (20,35,5)
///   table5b — spatially invariant noise around (30,10,50)
///   table5c — spatially variant (map-modulated) noise
///   table5d — real-world noise
/// Fields the preset tables leave open (window, delta, eps, and theta for
/// c/d) take the module defaults; every resolved value is recorded in run
/// manifests.
std::optional<PipelineConfig> preset_config(const std::string& name);

std::vector<std::string> preset_names();

/// The scale-aware solver tolerance for a config's group shape
/// (rows 3d^2, cols N), applied when no explicit eps is given.
void resolve_solver_eps(PipelineConfig& cfg);

}  // namespace dtnfm

#endif  // DTNFM_PRESETS_HPP
