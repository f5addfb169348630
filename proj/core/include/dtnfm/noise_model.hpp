#ifndef DTNFM_NOISE_MODEL_HPP
#define DTNFM_NOISE_MODEL_HPP

#include <Eigen/Dense>
#include <array>

#include "dtnfm/admm.hpp"

namespace dtnfm {

/// Estimates below can hit exactly zero (the absolute value in the noise
/// estimators cancels); sigma values are floored here before being raised to
/// negative powers.
inline constexpr double kSigmaFloor = 1e-4;

/// Default smoothing constant of the relative-weight formula.
inline constexpr double kRelativeWeightEps = 1e-8;

/// Per-group noise statistics. sigma_c / sigma_j are stored floored
/// (>= kSigmaFloor); p was computed from the raw estimates.
struct GroupNoiseStats {
  std::array<double, 3> sigma_c{};  // channel noise std (r,g,b)
  Eigen::VectorXd sigma_j;          // per-patch noise std, length N
  double p = 0.5;                   // relative weight in [0,1]
  std::array<double, 3> sigma0{};   // input noise std the estimates refer to
};

enum class AblationMode { kFull, kDropC, kDropS };

/// Per-patch noise std estimate: for column j,
///   sigma_j = sqrt(| mean(sigma0^2) - ||y_j - xhat_j||^2 / (3d^2) |).
/// Rows of the group matrices are the 3d^2 stacked channel blocks.
Eigen::VectorXd estimate_sigma_j(const Eigen::MatrixXd& y_group,
                                 const Eigen::MatrixXd& xhat_group,
                                 const std::array<double, 3>& sigma0);

/// Per-channel noise std estimate, pooled over the group's N patches:
///   sigma_c = sqrt(| sigma_{c0}^2 - ||Y^(c) - Xhat^(c)||_F^2 / (d^2 N) |).
/// Reduces to the single-patch estimator at N = 1.
std::array<double, 3> estimate_sigma_c(const Eigen::MatrixXd& y_group,
                                       const Eigen::MatrixXd& xhat_group,
                                       const std::array<double, 3>& sigma0);

/// Relative weight between channel and spatial variation:
///   p = (v_c + eps) / (v_c + v_s + 2 eps),
/// v being the coefficient of variation (population std over mean; defined as
/// 0 for an all-zero vector). Always in [0,1]; both-degenerate gives 0.5.
double relative_weight(const std::array<double, 3>& sigma_c,
                       const Eigen::VectorXd& sigma_j,
                       double eps_p = kRelativeWeightEps);

/// Full estimation chain for one group: raw sigma estimates, p from the raw
/// values, then flooring.
GroupNoiseStats make_group_stats(const Eigen::MatrixXd& y_group,
                                 const Eigen::MatrixXd& xhat_group,
                                 const std::array<double, 3>& sigma0,
                                 double eps_p = kRelativeWeightEps);

/// Diagonal weights of the denoising model: the c-vector is three constant
/// blocks sigma_c^{-p} of length d^2, the s-vector has entries
/// sigma_j^{-(1-p)}. patch_size is the patch side d.
DiagonalWeights build_weights(const GroupNoiseStats& stats, int patch_size);

/// Ablation variants: kDropC uses c = 1 with s_j = sigma_j^{-1};
/// kDropS uses s = 1 with channel blocks sigma_c^{-1}; kFull delegates to
/// build_weights.
DiagonalWeights ablation_weights(const GroupNoiseStats& stats,
                                 AblationMode mode, int patch_size);

const char* ablation_mode_name(AblationMode mode);

/// Parses "full" / "drop_C" / "drop_S"; throws InvalidInputError otherwise.
AblationMode parse_ablation_mode(const std::string& name);

}  // namespace dtnfm

#endif  // DTNFM_NOISE_MODEL_HPP
