#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "fht/cheb_core.hpp"
#include "fht/weight_param.hpp"

namespace fht {

/// Diagonals of the decomposition k(s - t) = k(s) k(t) (1 - sign r(s) r(t)):
/// ratios r on S- and T-nodes, weights k on both.
struct DiagWeights {
  std::vector<double> d_s;
  std::vector<double> d_t;
  std::vector<double> cosh_s;
  std::vector<double> cosh_t;
};

DiagWeights diag_weights(const WeightParam& p, std::size_t n);

struct SolveReport {
  std::size_t iterations = 0;
  /// Successive-difference norms, L_d (Neumann) or L_m (mean-constrained).
  std::vector<double> residual_history;
  /// Largest ratio of consecutive residuals above the roundoff floor.
  double measured_ratio = 0.0;
  double bound_ratio = 0.0;
  double coercive_const = 0.0;
  double final_defect = 0.0;
  bool converged = true;
};

struct Solution {
  GridFn f;
  SolveReport report;
};

/// Weighted FHT (1/pi) int k(s - t) f(t) / (s - t) dt for f on T-nodes,
/// evaluated on S-nodes as
///   k_s * [C3 S1^T - sign D_s C3 S1^T D_t] (k_t * f).
GridFn cosh_forward(const GridFn& f, const WeightParam& p);

/// I - sign * S1 C3^T D_s C3 S1^T D_t.
Eigen::MatrixXd system_matrix(const WeightParam& p, std::size_t n);

/// Solves the system above by LU with partial pivoting; returns f on T-nodes
/// with f(t_0) = 0.
Solution cosh_invert_direct(const GridFn& F_mu, const WeightParam& p);

/// Fixed-point iteration f^ <- f^0 + sign M f^ with the same operator as the
/// direct solve. Stops when the L_d difference of successive iterates drops
/// below tol; running out of iterations is reported, not thrown.
Solution cosh_invert_neumann(const GridFn& F_mu, const WeightParam& p,
                             double tol, std::size_t max_iter);

/// Mean-constrained inversion on the m-flavor grids: F_mu on U-nodes, the
/// weighted mean fbar = (1/2) int k(t) f(t) dt supplied by the caller, result
/// on S-nodes. Iterates
///   f^ <- f^0 + sign H_m^{-1}[ r_u * H_m[ r_s * f^ ] ]
/// whose limit is k f - fbar.
Solution cosh_invert_mean_constrained(const GridFn& F_mu, const WeightParam& p,
                                      double mean_fbar, double tol,
                                      std::size_t max_iter);

/// G(s) = sign r(s) H[r](s) - (1/pi) ln((1+s)/(1-s)), the fbar coefficient
/// in the right-hand side of the mean-constrained equation. |s| < 1.
double mean_correction(const WeightParam& p, std::size_t n, double s);

/// (1/2) int k(t) f(t) dt by the grid's L_m rule (S- or T-nodes).
double weighted_mean(const GridFn& f, const WeightParam& p);

enum class KernelKind {
  Kd,  ///< int r(s) / (pi (s - t)) ds / w(s)
  Km,  ///< int r(s) w(s) / (pi (s - t)) ds
};

struct KernelFn {
  KernelKind kind;
  Grid grid;
  std::vector<double> values;
  /// T-coefficients of r (Kd) or U-coefficients of r (Km).
  ChebCoeffs series;

  /// Kd: sum_{n>=1} c_n U_{n-1}(x).  Km: -sum_n d_n T_{n+1}(x).
  double operator()(double x) const;
};

/// Builds the kernel from an N-term interpolant of r, N = eval_grid.size().
KernelFn kernel(KernelKind kind, const WeightParam& p, const Grid& eval_grid);

/// The unsigned composite spectral operator:
///   Kd: S1 C3^T D_s C3 S1^T D_t f        (f on T-nodes)
///   Km: H_m^{-1}[ r_u * H_m[ r_s * f ] ]  (f on S-nodes)
GridFn composite_operator(KernelKind kind, const WeightParam& p, const GridFn& f);

/// The same operator in single-integral kernel form,
///   Kd: r(t)^2 f(t) + w(t)     int (K(t) - K(u)) / (pi (t - u)) r(u) f(u) du
///   Km: r(t)^2 f(t) + 1/w(t)   int (K(t) - K(u)) / (pi (t - u)) r(u) f(u) du
/// with f continued off-grid by its spectral interpolant and the integral
/// taken by the oracle's regular rule.
GridFn kernel_form_operator(KernelKind kind, const WeightParam& p,
                            const GridFn& f, std::size_t m_points = 4096);

struct ConditionEstimate {
  double measured = 0.0;
  double bound = 0.0;
};

/// 2-norm condition number of system_matrix from its singular values.
ConditionEstimate condition_estimate(const WeightParam& p, std::size_t n);

struct NullRow {
  std::size_t n = 0;
  double norm_ld = 0.0;
  double norm_lm = 0.0;
};

/// Applies cosh_forward to cos(mu w(t)) on T-nodes of each size and reports
/// the weighted norms of the image. Rows come back in increasing n.
/// Requires a real, nonzero mu.
std::vector<NullRow> null_experiment(const WeightParam& p,
                                     std::vector<std::size_t> sizes);

/// Values of F on the S-nodes of a smaller grid, from the Chebyshev
/// interpolant of the fine samples.
GridFn downsample(const GridFn& F, std::size_t n);

}  // namespace fht
