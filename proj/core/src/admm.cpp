#include "dtnfm/admm.hpp"

#include <cmath>
#include <string>

#include "dtnfm/errors.hpp"
#include "dtnfm/lowrank_prox.hpp"

namespace dtnfm {

void SolverConfig::validate() const {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw InvalidInputError("solver: lambda must be > 0");
  }
  if (t < 0) throw InvalidInputError("solver: t must be >= 0");
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw InvalidInputError("solver: alpha must be >= 0");
  }
  if (!(rho0 > 0.0) || !std::isfinite(rho0)) {
    throw InvalidInputError("solver: rho0 must be > 0");
  }
  if (!(mu > 1.0) || !std::isfinite(mu)) {
    throw InvalidInputError("solver: mu must be > 1");
  }
  if (max_iters < 1) throw InvalidInputError("solver: max_iters must be >= 1");
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw InvalidInputError("solver: eps must be > 0");
  }
}

double SolverConfig::default_eps(int rows, int cols) {
  return 1e-4 * std::sqrt(static_cast<double>(rows) * cols);
}

void DiagonalWeights::validate() const {
  if (c.size() == 0 || s.size() == 0) {
    throw InvalidInputError("weights: empty diagonal");
  }
  if (!((c.array() > 0.0).all() && c.allFinite())) {
    throw InvalidInputError("weights: c entries must be finite and > 0");
  }
  if (!((s.array() > 0.0).all() && s.allFinite())) {
    throw InvalidInputError("weights: s entries must be finite and > 0");
  }
}

DiagonalWeights DiagonalWeights::identity(int rows, int cols) {
  return {Eigen::VectorXd::Ones(rows), Eigen::VectorXd::Ones(cols)};
}

Eigen::MatrixXd x_update(const Eigen::MatrixXd& y, const Eigen::MatrixXd& z,
                         const Eigen::MatrixXd& a, const DiagonalWeights& w,
                         double rho) {
  if (!(rho > 0.0)) throw InvalidInputError("x_update: rho must be > 0");
  if (y.rows() != z.rows() || y.cols() != z.cols() || y.rows() != a.rows() ||
      y.cols() != a.cols() || w.c.size() != y.rows() ||
      w.s.size() != y.cols()) {
    throw InvalidInputError("x_update: dimension mismatch");
  }
  // m_ij = 2 c_i^2 s_j^2, a rank-1 array; denominator m_ij + rho is > 0.
  const Eigen::ArrayXXd m =
      2.0 * (w.c.array().square().matrix() *
             w.s.array().square().matrix().transpose())
                .array();
  return ((m * y.array() + rho * z.array() - a.array()) / (m + rho)).matrix();
}

Eigen::MatrixXd z_update(const Eigen::MatrixXd& x, const Eigen::MatrixXd& a,
                         double rho, const SolverConfig& cfg) {
  if (!(rho > 0.0)) throw InvalidInputError("z_update: rho must be > 0");
  return tnf_shrink_rule(x + a / rho, {cfg.lambda / rho, cfg.t, cfg.alpha});
}

Eigen::MatrixXd solve(const Eigen::MatrixXd& y, const DiagonalWeights& w,
                      const SolverConfig& cfg, SolveTrace* trace) {
  cfg.validate();
  w.validate();
  if (!y.allFinite()) throw InvalidInputError("solve: non-finite Y");
  if (w.c.size() != y.rows() || w.s.size() != y.cols()) {
    throw InvalidInputError("solve: weight/matrix dimension mismatch");
  }

  const auto rows = y.rows();
  const auto cols = y.cols();
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(rows, cols);
  Eigen::MatrixXd z = Eigen::MatrixXd::Zero(rows, cols);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(rows, cols);

  const Eigen::ArrayXXd m =
      2.0 * (w.c.array().square().matrix() *
             w.s.array().square().matrix().transpose())
                .array();
  const Eigen::ArrayXXd my = m * y.array();

  if (trace != nullptr) {
    trace->iterations.clear();
    trace->iterations.reserve(cfg.max_iters);
  }

  for (int k = 0; k < cfg.max_iters; ++k) {
    const double rho = cfg.rho0 * std::pow(cfg.mu, k);

    Eigen::MatrixXd x_next =
        ((my + rho * z.array() - a.array()) / (m + rho)).matrix();
    if (!x_next.allFinite()) {
      throw SolverDivergenceError(
          "solve: non-finite X iterate at iteration " + std::to_string(k + 1),
          k + 1);
    }
    Eigen::MatrixXd b = x_next + a / rho;
    if (!b.allFinite()) {
      throw SolverDivergenceError(
          "solve: non-finite prox input at iteration " + std::to_string(k + 1),
          k + 1);
    }
    Eigen::MatrixXd z_next =
        tnf_shrink_rule(b, {cfg.lambda / rho, cfg.t, cfg.alpha});
    a += rho * (x_next - z_next);
    if (!z_next.allFinite() || !a.allFinite()) {
      throw SolverDivergenceError(
          "solve: non-finite iterate at iteration " + std::to_string(k + 1),
          k + 1);
    }

    const double primal_gap = (x_next - z_next).norm();
    const double dx = (x_next - x).norm();
    const double dz = (z_next - z).norm();
    if (trace != nullptr) {
      trace->iterations.push_back({k + 1, rho, primal_gap, dx, dz});
    }

    x.swap(x_next);
    z.swap(z_next);

    if (primal_gap <= cfg.eps && dx <= cfg.eps && dz <= cfg.eps) break;
  }
  return x;
}

}  // namespace dtnfm
