#ifndef DTNFM_PATCH_ENGINE_HPP
#define DTNFM_PATCH_ENGINE_HPP

#include <Eigen/Dense>
#include <array>
#include <functional>
#include <utility>
#include <vector>

#include "dtnfm/admm.hpp"
#include "dtnfm/image.hpp"
#include "dtnfm/noise_model.hpp"

namespace dtnfm {

/// Top-left pixel position of a patch (row, col).
using PatchPos = std::pair<int, int>;

/// Hyperparameters of the outer denoising loop.
struct PipelineConfig {
  int theta = 2;        // outer iterations
  int group_size = 60;  // N similar patches per group
  int patch_size = 6;   // patch side d
  int stride = 5;       // key-patch stride s
  int window = 31;      // search-window side, odd
  double delta = 0.1;   // iterative-regularization coefficient
  SolverConfig solver;
  AblationMode ablation = AblationMode::kFull;
  int threads = 0;      // worker cap; 0 = runtime default

  void validate() const;
  /// Additionally checks the config against image dimensions.
  void validate_for(int height, int width) const;
};

/// One key patch with its similar-patch group. Column j of y is the
/// vectorized member patch j: three stacked d^2 channel blocks (r,g,b),
/// row-major within each block. members[0] is the key itself.
struct PatchGroup {
  PatchPos key;
  std::vector<PatchPos> members;
  Eigen::MatrixXd y;  // 3d^2 × N
};

/// Key-patch top-left positions. Per side the count is
/// max(1, ceil((H-d)/s)); positions run 0, s, 2s, ... with the final position
/// at H-d and trailing positions pulled forward so consecutive gaps never
/// exceed d (total coverage whenever that many patches can cover the side).
std::vector<PatchPos> key_patch_grid(int height, int width, int patch_size,
                                     int stride);

/// Vectorize the d×d×3 patch at (row, col) into out (length 3d^2).
void extract_patch(const ColorImage& image, int row, int col, int patch_size,
                   double* out);

/// Patch matrix for a list of positions (columns in order).
Eigen::MatrixXd extract_patches(const ColorImage& image,
                                const std::vector<PatchPos>& positions,
                                int patch_size);

/// Similar-patch search: squared Euclidean distance between the key patch
/// vector and every fully-inside patch whose top-left falls in the window
/// centered on the key. Key first, then the N-1 best candidates; ties broken
/// by row-major position. The window grows when it holds fewer than N
/// candidates; a window covering every valid position with fewer than N
/// candidates yields a smaller group.
PatchGroup group_similar(const ColorImage& image, PatchPos key,
                         const PipelineConfig& cfg);

/// Uniform-weight accumulation of denoised patches back into image space.
class PatchAccumulator {
 public:
  PatchAccumulator(int height, int width);

  /// Adds each column of `patches` at the matching member position.
  void add(const std::vector<PatchPos>& members, const Eigen::MatrixXd& patches,
           int patch_size);

  /// Pixel-wise mean of everything accumulated. Throws
  /// InternalConsistencyError if some pixel was never covered.
  ColorImage finalize() const;

 private:
  ColorImage sum_;
  std::vector<double> count_;
};

/// Mean-aggregates denoised groups into an image.
ColorImage aggregate(
    const std::vector<std::pair<const PatchGroup*, const Eigen::MatrixXd*>>&
        groups,
    int height, int width, int patch_size);

/// Per-group denoiser plugged into the pipeline: given the group (extracted
/// from the current regularized image) and the same-position patches of the
/// previous clean estimate, produce the denoised patch matrix.
using GroupDenoiser = std::function<Eigen::MatrixXd(
    const PatchGroup& group, const Eigen::MatrixXd& xhat_patches)>;

/// Wall-clock stage timings, cumulative over outer iterations.
struct DenoiseStats {
  double grouping_seconds = 0.0;
  double solving_seconds = 0.0;
  double aggregation_seconds = 0.0;
  int groups_processed = 0;
};

/// Outer loop: theta rounds of iterative regularization
/// (Y_l = X_{l-1} + delta (Y_0 - X_{l-1})), grouping on Y_l, per-group
/// denoising, and mean aggregation. Returns the final estimate *unclamped*.
/// Groups within one round run in parallel; results land in per-group slots
/// and are aggregated in grid order, so output bits do not depend on thread
/// count or scheduling.
ColorImage run_pipeline(const ColorImage& noisy, const PipelineConfig& cfg,
                        const GroupDenoiser& denoiser,
                        DenoiseStats* stats = nullptr);

/// Full denoiser: per-group noise statistics (channel and per-patch sigma,
/// relative weight), diagonal weights (or their ablation variant), ADMM
/// solve. Output clamped to [0,255].
ColorImage denoise(const ColorImage& noisy, const std::array<double, 3>& sigma0,
                   const PipelineConfig& cfg, DenoiseStats* stats = nullptr);

}  // namespace dtnfm

#endif  // DTNFM_PATCH_ENGINE_HPP
