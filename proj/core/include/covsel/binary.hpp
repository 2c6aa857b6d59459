#pragma once

#include "covsel/bcd.hpp"
#include "covsel/nesterov.hpp"
#include "covsel/types.hpp"

namespace covsel {

/// Pairwise binary (spin) exponential-family parameters: linear terms
/// theta_i and a symmetric, zero-diagonal interaction matrix theta_ij.
struct LogisticParams {
  Vector theta_linear;
  Matrix theta_pair;

  LogisticParams(Vector linear, Matrix pair);
  Index p() const { return theta_linear.size(); }
};

struct BinaryEstimate {
  Matrix gamma;  // dual solution of the modified problem
  LogisticParams params;
  Vector mu_bar;
  double gap = 0.0;
  long iterations = 0;
  SolverKind solver = SolverKind::Bcd;
};

/// Maps +-1 sample data to the modified dual problem: S about the mean,
/// dual diagonal fixed at S_kk + 1/3, off-diagonal box of width lambda.
Problem binary_problem(const SampleMatrix& samples, double lambda,
                       double epsilon);

struct BinarySolveOptions {
  SolverKind solver = SolverKind::Bcd;
  BcdOptions bcd;
  NesterovOptions nesterov;
};

/// Solves the modified dual problem and reads the model parameters off the
/// solution: theta_k = mu_k, theta_kj = -(Gamma^-1)_kj.
BinaryEstimate solve_binary(const SampleMatrix& samples, double lambda,
                            double epsilon, const BinarySolveOptions& opts = {});

/// Exact log partition function by 2^p enumeration (p <= 20), computed
/// with max subtraction.
double exact_log_partition(const LogisticParams& params);

/// (p+1)x(p+1) interaction matrix: zero diagonal, first row/column the
/// linear terms, the rest the pairwise terms.
Matrix interaction_matrix(const LogisticParams& params);

/// Log-determinant upper bound on the log partition function:
///   (p/2) log(e pi / 2) - (p+1)/2
///     - (1/2) max_nu { nu^T m + log det(-(R(theta) + diag(nu))) },
/// m = (1, 4/3, ..., 4/3), inner maximum by damped Newton.
double relaxed_log_partition_bound(const LogisticParams& params);

}  // namespace covsel
