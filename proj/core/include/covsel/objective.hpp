#pragma once

#include "covsel/types.hpp"

namespace covsel {

/// Second moment matrix about the mean: S = (1/n) sum (y - mu)(y - mu)^T.
SecondMoment second_moment(const SampleMatrix& samples);

/// log det X - trace(S X) - <penalty, |X|>, the penalized log-likelihood.
/// The penalty weight is lambda on every entry (diagonal included) for a
/// plain problem; with a diagonal override the diagonal weight is the
/// override slack.  X must be symmetric positive definite.
double primal_objective(const Matrix& X, const Problem& prob);

/// log det W for symmetric positive definite W.
double dual_objective(const Matrix& W);

/// trace(W^-1 S) - p + <penalty, |W^-1|>.  Nonnegative (up to roundoff) for
/// dual-feasible W; zero exactly at the optimum.  W^-1 is symmetrized
/// before the elementwise sum.
double duality_gap(const Matrix& W, const Problem& prob);

/// Maximum stationarity violation of the penalized likelihood at X:
/// entries classified nonzero must satisfy S - X^-1 = -+penalty exactly,
/// zero entries must satisfy |S - X^-1| <= penalty.
double kkt_residual(const Matrix& X, const Problem& prob);

/// Spectral envelope of the precision estimate:
/// a = 1/(||S||_2 + penalty_max * p), b = p / penalty_min.
/// A degenerate a == b is widened by a factor 1e-6 on each side.
struct EigenvalueBounds {
  double lower;
  double upper;
};
EigenvalueBounds eigenvalue_bounds(const Problem& prob);

/// Columns k with lambda >= |S_kj| for every j != k.  For these columns the
/// solution is exactly diagonal in row/column k.
std::vector<Index> screening_diagonal_columns(const Problem& prob);

}  // namespace covsel
