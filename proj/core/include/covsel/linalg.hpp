#pragma once

#include "covsel/types.hpp"

namespace covsel {

/// (A + A^T)/2.  All matrix inputs pass through this at module boundaries.
Matrix symmetrized(const Matrix& a);

bool all_finite(const Matrix& a);

double max_abs(const Matrix& a);

/// Largest absolute eigenvalue of a symmetric matrix.
double spectral_norm_sym(const Matrix& a);

/// log det of a symmetric positive definite matrix via Cholesky.
/// Throws DomainError if the factorization fails.
double log_det_spd(const Matrix& a, const char* what = "matrix");

/// Inverse of a symmetric positive definite matrix via Cholesky,
/// symmetrized on the way out.
Matrix spd_inverse(const Matrix& a, const char* what = "matrix");

bool is_spd(const Matrix& a);

/// Sparsity-classification threshold: entries of X with magnitude at or
/// below 1e-8 * max(1, ||X||_max) count as zero.
double zero_threshold(const Matrix& x);

/// sign(s) * max(|s| - t, 0)
inline double soft_threshold(double s, double t) {
  if (s > t) return s - t;
  if (s < -t) return s + t;
  return 0.0;
}

}  // namespace covsel
