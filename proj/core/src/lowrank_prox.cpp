#include "dtnfm/lowrank_prox.hpp"

#include <algorithm>
#include <cmath>

#include "dtnfm/errors.hpp"

namespace dtnfm {

namespace {

void require_finite(const Eigen::MatrixXd& m, const char* what) {
  if (!m.allFinite()) {
    throw InvalidInputError(std::string(what) + ": non-finite matrix entries");
  }
}

}  // namespace

void SpectralShrinkParams::validate() const {
  if (!(tau >= 0.0) || !std::isfinite(tau)) {
    throw InvalidInputError("spectral shrink: tau must be finite and >= 0");
  }
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw InvalidInputError("spectral shrink: alpha must be finite and >= 0");
  }
  if (t < 0) {
    throw InvalidInputError("spectral shrink: t must be >= 0");
  }
}

SvdTriple thin_svd(const Eigen::MatrixXd& m) {
  require_finite(m, "thin_svd");
  Eigen::BDCSVD<Eigen::MatrixXd> svd(m,
                                     Eigen::ComputeThinU | Eigen::ComputeThinV);
  return {svd.matrixU(), svd.singularValues(), svd.matrixV()};
}

double tnf_norm(const Eigen::MatrixXd& m, int t, double alpha) {
  SpectralShrinkParams{0.0, t, alpha}.validate();
  require_finite(m, "tnf_norm");
  const int k = static_cast<int>(std::min(m.rows(), m.cols()));
  if (t >= k) return 0.0;
  Eigen::BDCSVD<Eigen::MatrixXd> svd(m);
  const Eigen::VectorXd& sigma = svd.singularValues();
  double sum = 0.0;
  double sumsq = 0.0;
  for (int i = t; i < k; ++i) {
    sum += sigma[i];
    sumsq += sigma[i] * sigma[i];
  }
  return sum - alpha * std::sqrt(sumsq);
}

namespace {

// Exact objective realized by emitting the spectrum `spec` against input
// singular values `sigma`: (1/2)||spec - sigma||^2 + tau * tnf(sorted spec).
double spectrum_objective(const Eigen::VectorXd& spec,
                          const Eigen::VectorXd& sigma, double tau, int t,
                          double alpha) {
  const int k = static_cast<int>(sigma.size());
  double fit = 0.0;
  for (int i = 0; i < k; ++i) {
    const double d = spec[i] - sigma[i];
    fit += 0.5 * d * d;
  }
  std::vector<double> sorted(spec.data(), spec.data() + k);
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double sum = 0.0;
  double sumsq = 0.0;
  for (int i = t; i < k; ++i) {
    sum += sorted[i];
    sumsq += sorted[i] * sorted[i];
  }
  return fit + tau * (sum - alpha * std::sqrt(sumsq));
}

}  // namespace

Eigen::VectorXd tnf_shrink_spectrum_rule(const Eigen::VectorXd& sigma,
                                         const SpectralShrinkParams& params,
                                         TnfProxInfo* info) {
  params.validate();
  const int k = static_cast<int>(sigma.size());
  Eigen::VectorXd out = sigma;
  if (params.tau == 0.0 || params.t >= k) return out;

  double norm_sq = 0.0;
  for (int i = params.t; i < k; ++i) {
    const double shrunk = std::max(sigma[i] - params.tau, 0.0);
    out[i] = shrunk;
    norm_sq += shrunk * shrunk;
  }
  const double norm = std::sqrt(norm_sq);
  if (norm > 0.0) {
    const double scale = 1.0 + params.alpha * params.tau / norm;
    for (int i = params.t; i < k; ++i) out[i] *= scale;
  }
  if (info != nullptr) {
    info->tail_exceeds_head =
        params.t > 0 && params.t < k && out[params.t] > out[params.t - 1];
  }
  return out;
}

Eigen::VectorXd tnf_shrink_spectrum(const Eigen::VectorXd& sigma,
                                    const SpectralShrinkParams& params,
                                    TnfProxInfo* info) {
  params.validate();
  const int k = static_cast<int>(sigma.size());
  Eigen::VectorXd out = sigma;
  if (params.tau == 0.0 || params.t >= k) return out;

  const double tau = params.tau;
  const double alpha = params.alpha;
  const int t = params.t;
  const int q = k - t;

  // The head passes through; the tail subproblem
  //   min over r >= 0 of (1/2)||r - sigma_tail||^2 + tau*(sum r - alpha*||r||)
  // has two families of stationary points (the sign of 1 - alpha*tau/||r||
  // splits them):
  //   * the soft-threshold support {sigma_i > tau} rescaled by
  //     1 + alpha*tau/||S_tau||  (the generic shrinkage rule), and
  //   * supports among {sigma_i <= tau} with r_i = (tau-sigma_i)*R/D,
  //     D = ||(tau-sigma)_S||, R = alpha*tau - D > 0, where the concave
  //     -alpha*||r|| term pays for keeping (or inflating) small values.
  // Plus the all-zero tail. Each candidate is scored on the exact objective
  // of its emitted full spectrum (re-sorted, so head/tail crossings are
  // priced correctly) and the best one wins.
  Eigen::VectorXd best = sigma;
  best.tail(q).setZero();
  double best_obj = spectrum_objective(best, sigma, tau, t, alpha);

  Eigen::VectorXd candidate = sigma;
  const auto consider = [&](const Eigen::VectorXd& tail_cand) {
    candidate.tail(q) = tail_cand;
    const double obj = spectrum_objective(candidate, sigma, tau, t, alpha);
    if (obj < best_obj) {
      best_obj = obj;
      best.tail(q) = tail_cand;
    }
    // a nonincreasing re-pairing never fits worse and costs the same penalty
    Eigen::VectorXd sorted = candidate;
    std::sort(sorted.data(), sorted.data() + k, std::greater<>());
    const double sobj = spectrum_objective(sorted, sigma, tau, t, alpha);
    if (sobj < best_obj) {
      best_obj = sobj;
      best = sorted;
    }
  };

  Eigen::VectorXd soft(q);
  for (int i = 0; i < q; ++i) soft[i] = std::max(sigma[t + i] - tau, 0.0);
  const double soft_norm = soft.norm();
  if (soft_norm > 0.0) {
    const Eigen::VectorXd rule = (1.0 + alpha * tau / soft_norm) * soft;
    if (info != nullptr && t > 0) {
      // the open diagnostic: inputs where the plain shrinkage rule would emit
      // a first tail value above the last preserved head value
      info->tail_exceeds_head = rule[0] > sigma[t - 1];
    }
    consider(rule);
  }

  if (t > 0 && soft_norm > 0.0) {
    // Boundary pooling: when the rescaled tail overtakes the head, the
    // order-constrained optimum ties a block of trailing head values and
    // leading tail values at a common level v, with the remaining active
    // tail values sharing the norm coupling c = alpha*tau/||tail||:
    //   v * (pool_size - c*p_t) = sum(pooled sigma) - p_t * tau
    //   rho_j * (1 - c)         = sigma_j - tau
    // Solved by fixed-point iteration on c for each small pool shape.
    std::vector<int> active;  // non-pooled tail indices above the threshold
    for (int p_h = 1; p_h <= std::min(t, 4); ++p_h) {
      for (int p_t = 1; p_t <= std::min(q, 4); ++p_t) {
        active.clear();
        double pooled_sum = 0.0;
        for (int i = t - p_h; i < t; ++i) pooled_sum += sigma[i];
        for (int i = 0; i < p_t; ++i) pooled_sum += sigma[t + i];
        for (int i = p_t; i < q; ++i) {
          if (sigma[t + i] > tau) active.push_back(i);
        }
        const int pool_size = p_h + p_t;

        double c = alpha * tau / soft_norm;
        bool ok = false;
        double v = 0.0;
        for (int it = 0; it < 60; ++it) {
          const double denom = pool_size - c * p_t;
          if (denom <= 0.0 || c >= 1.0) break;
          v = (pooled_sum - p_t * tau) / denom;
          if (v <= 0.0) break;
          double r2 = p_t * v * v;
          for (int i : active) {
            const double rho_i = (sigma[t + i] - tau) / (1.0 - c);
            r2 += rho_i * rho_i;
          }
          const double c_next = alpha * tau / std::sqrt(r2);
          ok = std::abs(c_next - c) < 1e-13;
          c = c_next;
          if (ok) break;
        }
        if (!ok) continue;

        Eigen::VectorXd pooled = Eigen::VectorXd::Zero(k);
        for (int i = 0; i < t - p_h; ++i) pooled[i] = sigma[i];
        for (int i = t - p_h; i < t + p_t; ++i) pooled[i] = v;
        for (int i : active) pooled[t + i] = (sigma[t + i] - tau) / (1.0 - c);
        const double obj = spectrum_objective(pooled, sigma, tau, t, alpha);
        if (obj < best_obj) {
          best_obj = obj;
          best = pooled;
        }
      }
    }
  }

  if (alpha > 0.0) {
    // indices at or below the threshold, closest to it first
    std::vector<int> idx;
    for (int i = 0; i < q; ++i) {
      if (sigma[t + i] <= tau) idx.push_back(i);
    }
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
      return tau - sigma[t + a] < tau - sigma[t + b];
    });

    Eigen::VectorXd tail_cand(q);
    const auto consider_support = [&](unsigned mask_or_prefix, bool is_mask) {
      tail_cand.setZero();
      double d2 = 0.0;
      int first = -1;
      for (std::size_t j = 0; j < idx.size(); ++j) {
        const bool in = is_mask ? ((mask_or_prefix >> j) & 1u) != 0
                                : j < mask_or_prefix;
        if (!in) continue;
        const double gap = tau - sigma[t + idx[j]];
        d2 += gap * gap;
        if (first < 0) first = idx[j];
      }
      if (first < 0) return;
      const double d = std::sqrt(d2);
      if (d == 0.0) {
        tail_cand[first] = alpha * tau;  // sigma exactly at the threshold
        consider(tail_cand);
        return;
      }
      const double r = alpha * tau - d;
      if (r <= 0.0) return;
      for (std::size_t j = 0; j < idx.size(); ++j) {
        const bool in = is_mask ? ((mask_or_prefix >> j) & 1u) != 0
                                : j < mask_or_prefix;
        if (in) tail_cand[idx[j]] = (tau - sigma[t + idx[j]]) * r / d;
      }
      consider(tail_cand);
    };

    if (idx.size() <= 12) {
      const unsigned total = 1u << idx.size();
      for (unsigned mask = 1; mask < total; ++mask) {
        consider_support(mask, true);
      }
    } else {
      for (unsigned p = 1; p <= idx.size(); ++p) {
        consider_support(p, false);
      }
    }
  }

  out = best;
  return out;
}

namespace {

template <typename SpectrumFn>
Eigen::MatrixXd apply_spectral_map(const Eigen::MatrixXd& b,
                                   const SpectralShrinkParams& params,
                                   TnfProxInfo* info, const char* what,
                                   SpectrumFn&& fn) {
  params.validate();
  require_finite(b, what);
  if (info != nullptr) *info = TnfProxInfo{};
  const int k = static_cast<int>(std::min(b.rows(), b.cols()));
  if (params.tau == 0.0 || params.t >= k) return b;

  const SvdTriple svd = thin_svd(b);
  const Eigen::VectorXd spectrum = fn(svd.singular_values, params, info);
  return svd.u * spectrum.asDiagonal() * svd.v.transpose();
}

}  // namespace

Eigen::MatrixXd tnf_prox(const Eigen::MatrixXd& b,
                         const SpectralShrinkParams& params,
                         TnfProxInfo* info) {
  return apply_spectral_map(b, params, info, "tnf_prox", tnf_shrink_spectrum);
}

Eigen::MatrixXd tnf_shrink_rule(const Eigen::MatrixXd& b,
                                const SpectralShrinkParams& params,
                                TnfProxInfo* info) {
  return apply_spectral_map(b, params, info, "tnf_shrink_rule",
                            tnf_shrink_spectrum_rule);
}

}  // namespace dtnfm
