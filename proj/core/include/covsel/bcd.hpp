#pragma once

#include "covsel/types.hpp"

#include <Eigen/Cholesky>

namespace covsel {

struct BcdDiagnostics {
  std::vector<double> log_det_per_update;  // dual objective after each column
  std::vector<double> gap_per_check;
  double min_schur_complement = std::numeric_limits<double>::infinity();
};

struct BcdOptions {
  int max_sweeps = 100;
  double qp_tol = 1e-10;      // max coordinate change at which CD stops
  long qp_max_iter = 10000;   // cap on full coordinate passes
  int check_every = 1;        // gap check cadence, in sweeps
  BcdDiagnostics* diagnostics = nullptr;
  const Matrix* warm_start = nullptr;  // initial W; must be feasible and PD
};

/// Per-column subproblem data: the principal minor W with row/column j
/// removed, its Cholesky factor, and the box center S_j.
struct ColumnWorkspace {
  Matrix minor;
  Eigen::LLT<Matrix> minor_llt;
  Vector target;

  ColumnWorkspace() = default;
  ColumnWorkspace(Matrix minor_in, Vector target_in);
};

/// Cyclic coordinate descent with closed-form soft-threshold updates on
///   min_x  x^T Q x - s^T x + lambda ||x||_1,   Q symmetric PSD.
/// Zero-diagonal coordinates are pinned to zero (they carry no signal in a
/// PSD Gram matrix).  `warm` seeds the iterate when its size matches.
Vector lasso_dual_solve(const Matrix& Q, const Vector& s, double lambda,
                        const BcdOptions& opts = {}, const Vector* warm = nullptr);

/// Box-constrained column update
///   y-hat = argmin { y^T minor^-1 y : ||y - target||_inf <= lambda },
/// solved through its lasso dual; the primal column is recovered as
/// y = 2 * minor * x-hat and projected onto the box.
Vector column_qp(const ColumnWorkspace& ws, double lambda,
                 const BcdOptions& opts = {}, const Vector* warm = nullptr);

/// Block coordinate descent over rows/columns of the dual variable W,
/// starting from W = S + lambda I (or the diagonal override), sweeping
/// columns in ascending order until the duality gap drops below
/// prob.epsilon.  Throws ConvergenceError (carrying the last iterate) if
/// max_sweeps is exhausted first.
Estimate solve_bcd(const Problem& prob, const BcdOptions& opts = {});

}  // namespace covsel
