#ifndef DTNFM_ADMM_HPP
#define DTNFM_ADMM_HPP

#include <Eigen/Dense>
#include <vector>

namespace dtnfm {

/// Hyperparameters of the per-group ADMM solve.
struct SolverConfig {
  double lambda = 1.0;   // regularization weight
  int t = 2;             // truncation count of the tNF regularizer
  double alpha = 1.8;    // Frobenius coefficient of the tNF regularizer
  double rho0 = 0.5;     // initial penalty
  double mu = 1.002;     // penalty growth, > 1 so rho_k -> infinity
  int max_iters = 10;    // iteration cap K
  double eps = 1e-2;     // stopping tolerance on all three residuals

  void validate() const;

  /// Scale-aware default tolerance for a rows×cols problem:
  /// 1e-4 * sqrt(rows*cols). Frobenius norms grow with matrix size, so a
  /// fixed tolerance would mean different things at different group shapes.
  static double default_eps(int rows, int cols);
};

/// Diagonals of the weight matrices: c has three constant channel blocks of
/// length d^2 (rows of the patch matrix), s has one entry per patch (columns).
/// All entries strictly positive.
struct DiagonalWeights {
  Eigen::VectorXd c;
  Eigen::VectorXd s;

  void validate() const;

  static DiagonalWeights identity(int rows, int cols);
};

/// Per-iteration residual trace, recorded only when requested.
struct SolveTrace {
  struct Iteration {
    int iter;            // 1-based
    double rho;
    double primal_gap;   // ||X_{k+1} - Z_{k+1}||_F
    double dx;           // ||X_{k+1} - X_k||_F
    double dz;           // ||Z_{k+1} - Z_k||_F
  };
  std::vector<Iteration> iterations;
};

/// Exact minimizer of the weighted least-squares X-subproblem:
///   X_ij = (2 c_i^2 s_j^2 Y_ij + rho Z_ij - A_ij) / (2 c_i^2 s_j^2 + rho).
/// The weights are diagonal, so everything is elementwise; no d^2-sized
/// matrices are ever formed.
Eigen::MatrixXd x_update(const Eigen::MatrixXd& y, const Eigen::MatrixXd& z,
                         const Eigen::MatrixXd& a, const DiagonalWeights& w,
                         double rho);

/// Z-subproblem: the tNF shrinkage rule applied at B = X + A/rho with
/// tau = lambda/rho (head kept, tail soft-shrunk and rescaled). See
/// tnf_shrink_rule for how this relates to the exact prox when alpha > 1.
Eigen::MatrixXd z_update(const Eigen::MatrixXd& x, const Eigen::MatrixXd& a,
                         double rho, const SolverConfig& cfg);

/// Full ADMM on one patch matrix: X/Z updates, multiplier feedback
/// A += rho (X - Z), geometric penalty rho_k = rho0 * mu^k. Starts from
/// X = Z = A = 0 and stops at the iteration cap or when ||X-Z||_F, ||dX||_F
/// and ||dZ||_F are all <= eps. Deterministic given (y, w, cfg).
/// Throws SolverDivergenceError when iterates go non-finite.
Eigen::MatrixXd solve(const Eigen::MatrixXd& y, const DiagonalWeights& w,
                      const SolverConfig& cfg, SolveTrace* trace = nullptr);

}  // namespace dtnfm

#endif  // DTNFM_ADMM_HPP
