#ifndef DTNFM_LOWRANK_PROX_HPP
#define DTNFM_LOWRANK_PROX_HPP

#include <Eigen/Dense>

namespace dtnfm {

/// Parameters of the spectral shrinkage prox: weight tau, truncation count t
/// (the t leading singular values pass through untouched), and the Frobenius
/// coefficient alpha of the tNF regularizer.
struct SpectralShrinkParams {
  double tau = 0.0;
  int t = 0;
  double alpha = 0.0;

  /// Throws InvalidInputError unless tau >= 0, alpha >= 0, t >= 0.
  void validate() const;
};

/// Thin SVD of an m×n matrix: U is m×k, V is n×k, k = min(m,n);
/// singular values nonincreasing and nonnegative.
struct SvdTriple {
  Eigen::MatrixXd u;
  Eigen::VectorXd singular_values;
  Eigen::MatrixXd v;

  Eigen::MatrixXd reconstruct() const {
    return u * singular_values.asDiagonal() * v.transpose();
  }
};

SvdTriple thin_svd(const Eigen::MatrixXd& m);

/// Truncated nuclear norm minus truncated Frobenius norm:
///   sum_{i>t} sigma_i(M) - alpha * sqrt(sum_{i>t} sigma_i(M)^2).
/// Returns 0 when t >= min(m,n).
double tnf_norm(const Eigen::MatrixXd& m, int t, double alpha);

/// Optional diagnostics from tnf_prox.
struct TnfProxInfo {
  /// True when the plain shrinkage rule (soft-threshold + rescale) would emit
  /// a first tail value above the last preserved head value. Flags the inputs
  /// where large alpha*tau/||S_tau(r)|| breaks the spectrum ordering the
  /// closed-form construction assumes.
  bool tail_exceeds_head = false;
};

/// Proximal operator of tau*||.||_{t,*-F}: the global minimizer of
///   (1/2)||Z - B||_F^2 + tau * ||Z||_{t,*-F}.
/// Head singular values (i <= t) are preserved. In the generic regime the
/// tail is soft-shrunk by tau and rescaled by 1 + alpha*tau/||S_tau(r)||_2
/// (r the tail of sigma(B)). The concave -alpha*sqrt(...) term admits further
/// stationary branches when the shrunk tail is small against alpha*tau
/// (including ones that keep or inflate near-threshold values); all branches
/// are closed-form and the emitted spectrum is the one with the lowest exact
/// objective. tau = 0 and t >= min(m,n) both return B unchanged.
Eigen::MatrixXd tnf_prox(const Eigen::MatrixXd& b,
                         const SpectralShrinkParams& params,
                         TnfProxInfo* info = nullptr);

/// The plain shrinkage rule alone: soft-threshold the tail, rescale by
/// 1 + alpha*tau/||S_tau(r)||, zero tail when the threshold swallows it.
/// This is the Z-step the denoising iteration uses. It coincides with
/// tnf_prox whenever alpha <= 1 - or generally when the shrunk tail is large
/// against alpha*tau; for alpha > 1 it deliberately ignores the degenerate
/// minimizers that keep near-threshold noise (a zero matrix stays zero here,
/// which the iteration's fixed points rely on).
Eigen::MatrixXd tnf_shrink_rule(const Eigen::MatrixXd& b,
                                const SpectralShrinkParams& params,
                                TnfProxInfo* info = nullptr);

/// Spectrum-only forms of the two maps above (input must be nonincreasing).
Eigen::VectorXd tnf_shrink_spectrum(const Eigen::VectorXd& sigma,
                                    const SpectralShrinkParams& params,
                                    TnfProxInfo* info = nullptr);
Eigen::VectorXd tnf_shrink_spectrum_rule(const Eigen::VectorXd& sigma,
                                         const SpectralShrinkParams& params,
                                         TnfProxInfo* info = nullptr);

}  // namespace dtnfm

#endif  // DTNFM_LOWRANK_PROX_HPP
