#include "dtnfm/noise_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dtnfm/errors.hpp"

namespace dtnfm {

namespace {

void check_group_pair(const Eigen::MatrixXd& y_group,
                      const Eigen::MatrixXd& xhat_group) {
  if (y_group.rows() != xhat_group.rows() ||
      y_group.cols() != xhat_group.cols()) {
    throw InvalidInputError("noise stats: group/estimate dimension mismatch");
  }
  if (y_group.rows() % 3 != 0 || y_group.rows() == 0 || y_group.cols() == 0) {
    throw InvalidInputError("noise stats: rows must be a positive multiple of 3");
  }
}

double mean_sq(const std::array<double, 3>& v) {
  return (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]) / 3.0;
}

// Coefficient of variation with population std; 0 for an all-zero vector.
double coeff_of_variation(const double* values, int n) {
  double mean = 0.0;
  for (int i = 0; i < n; ++i) mean += values[i];
  mean /= n;
  if (mean == 0.0) return 0.0;
  double var = 0.0;
  for (int i = 0; i < n; ++i) {
    const double d = values[i] - mean;
    var += d * d;
  }
  var /= n;
  return std::sqrt(var) / mean;
}

}  // namespace

Eigen::VectorXd estimate_sigma_j(const Eigen::MatrixXd& y_group,
                                 const Eigen::MatrixXd& xhat_group,
                                 const std::array<double, 3>& sigma0) {
  check_group_pair(y_group, xhat_group);
  const double base = mean_sq(sigma0);
  const double rows = static_cast<double>(y_group.rows());  // 3d^2
  Eigen::VectorXd sigma(y_group.cols());
  for (Eigen::Index j = 0; j < y_group.cols(); ++j) {
    const double resid = (y_group.col(j) - xhat_group.col(j)).squaredNorm();
    sigma[j] = std::sqrt(std::abs(base - resid / rows));
  }
  return sigma;
}

std::array<double, 3> estimate_sigma_c(const Eigen::MatrixXd& y_group,
                                       const Eigen::MatrixXd& xhat_group,
                                       const std::array<double, 3>& sigma0) {
  check_group_pair(y_group, xhat_group);
  const Eigen::Index block = y_group.rows() / 3;  // d^2
  const double denom = static_cast<double>(block) * y_group.cols();
  std::array<double, 3> sigma{};
  for (int c = 0; c < 3; ++c) {
    const double resid = (y_group.middleRows(c * block, block) -
                          xhat_group.middleRows(c * block, block))
                             .squaredNorm();
    sigma[c] = std::sqrt(std::abs(sigma0[c] * sigma0[c] - resid / denom));
  }
  return sigma;
}

double relative_weight(const std::array<double, 3>& sigma_c,
                       const Eigen::VectorXd& sigma_j, double eps_p) {
  const double v_c = coeff_of_variation(sigma_c.data(), 3);
  const double v_s = coeff_of_variation(sigma_j.data(),
                                        static_cast<int>(sigma_j.size()));
  return (v_c + eps_p) / (v_c + v_s + 2.0 * eps_p);
}

GroupNoiseStats make_group_stats(const Eigen::MatrixXd& y_group,
                                 const Eigen::MatrixXd& xhat_group,
                                 const std::array<double, 3>& sigma0,
                                 double eps_p) {
  GroupNoiseStats stats;
  stats.sigma0 = sigma0;
  stats.sigma_c = estimate_sigma_c(y_group, xhat_group, sigma0);
  stats.sigma_j = estimate_sigma_j(y_group, xhat_group, sigma0);
  stats.p = relative_weight(stats.sigma_c, stats.sigma_j, eps_p);
  for (double& v : stats.sigma_c) v = std::max(v, kSigmaFloor);
  stats.sigma_j = stats.sigma_j.cwiseMax(kSigmaFloor);
  return stats;
}

DiagonalWeights build_weights(const GroupNoiseStats& stats, int patch_size) {
  if (patch_size < 1) throw InvalidInputError("build_weights: patch_size < 1");
  const int block = patch_size * patch_size;
  DiagonalWeights w;
  w.c.resize(3 * block);
  for (int c = 0; c < 3; ++c) {
    w.c.segment(c * block, block)
        .setConstant(std::pow(stats.sigma_c[c], -stats.p));
  }
  w.s = stats.sigma_j.array().pow(-(1.0 - stats.p));
  w.validate();
  return w;
}

DiagonalWeights ablation_weights(const GroupNoiseStats& stats,
                                 AblationMode mode, int patch_size) {
  if (patch_size < 1) {
    throw InvalidInputError("ablation_weights: patch_size < 1");
  }
  const int block = patch_size * patch_size;
  DiagonalWeights w;
  switch (mode) {
    case AblationMode::kFull:
      return build_weights(stats, patch_size);
    case AblationMode::kDropC:
      w.c = Eigen::VectorXd::Ones(3 * block);
      w.s = stats.sigma_j.cwiseInverse();
      break;
    case AblationMode::kDropS:
      w.c.resize(3 * block);
      for (int c = 0; c < 3; ++c) {
        w.c.segment(c * block, block).setConstant(1.0 / stats.sigma_c[c]);
      }
      w.s = Eigen::VectorXd::Ones(stats.sigma_j.size());
      break;
    default:
      throw InvalidInputError("ablation_weights: invalid mode");
  }
  w.validate();
  return w;
}

const char* ablation_mode_name(AblationMode mode) {
  switch (mode) {
    case AblationMode::kFull:
      return "full";
    case AblationMode::kDropC:
      return "drop_C";
    case AblationMode::kDropS:
      return "drop_S";
  }
  return "invalid";
}

AblationMode parse_ablation_mode(const std::string& name) {
  if (name == "full") return AblationMode::kFull;
  if (name == "drop_C") return AblationMode::kDropC;
  if (name == "drop_S") return AblationMode::kDropS;
  throw InvalidInputError("unknown ablation mode: " + name);
}

}  // namespace dtnfm
