#pragma once

#include <Eigen/Dense>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace covsel {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input has the wrong shape (too few rows, mismatched dimensions, ...).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Input values are invalid (non-finite entries, non-spin binary data, ...).
class DataError : public Error {
 public:
  using Error::Error;
};

/// A scalar argument is outside its admissible range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A matrix argument violates a positivity/invertibility requirement.
class DomainError : public Error {
 public:
  using Error::Error;
};

class SingularError : public Error {
 public:
  using Error::Error;
};

/// CSV / file format problem; carries 1-based coordinates when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, long line = 0, long column = 0)
      : Error(msg), line(line), column(column) {}
  long line;
  long column;
};

enum class DataKind { Gaussian, Binary };
enum class SolverKind { Bcd, Nesterov, Analytic };

std::string to_string(DataKind k);
std::string to_string(SolverKind k);

/// Raw data: n rows of samples over p variables.  Binary data is stored as
/// +-1.0 doubles and validated on construction.
struct SampleMatrix {
  Matrix data;
  DataKind kind = DataKind::Gaussian;
  std::vector<std::string> variable_names;  // empty, or exactly p labels

  SampleMatrix(Matrix d, DataKind k = DataKind::Gaussian,
               std::vector<std::string> names = {});

  Index n() const { return data.rows(); }
  Index p() const { return data.cols(); }
};

/// Second moment matrix about the sample mean together with the statistics
/// the penalty formulas need.  S is stored exactly symmetric.
struct SecondMoment {
  Matrix S;
  long n = 0;  // 0 when S was supplied directly and no sample count is known
  Vector sigma_hat;
  Vector mu_bar;

  static SecondMoment from_samples(const SampleMatrix& samples);
  /// Wraps an externally computed moment matrix: symmetrizes, checks
  /// positive semidefiniteness (clamping eigenvalues in the roundoff band
  /// to zero) and derives sigma_hat from the diagonal.
  static SecondMoment from_matrix(Matrix S, long n = 0);

  Index p() const { return S.rows(); }
};

/// One penalized estimation instance.
struct Problem {
  SecondMoment moment;
  double lambda = 0.0;
  double epsilon = 0.0;
  /// When present, the dual variable's diagonal is fixed at these values
  /// instead of S_kk + lambda (used by the binary reduction).
  std::optional<Vector> diag_override;

  Problem(SecondMoment m, double lambda, double epsilon,
          std::optional<Vector> diag_override = std::nullopt);

  Index p() const { return moment.p(); }
  const Matrix& S() const { return moment.S; }

  /// Value the dual diagonal is pinned to: S_kk + lambda, or the override.
  double dual_diagonal(Index k) const;
  /// Elementwise penalty weights: lambda off the diagonal; on the diagonal,
  /// lambda or the override slack.  The plain problem has a constant matrix.
  Matrix penalty_matrix() const;
  double max_penalty() const;
  double min_penalty() const;
};

/// Solver output: dual solution W (covariance estimate), primal solution
/// X = W^-1 (precision estimate), and the certificate that comes with them.
struct Estimate {
  Matrix W;
  Matrix X;
  double gap = 0.0;
  long iterations = 0;
  SolverKind solver = SolverKind::Bcd;

  /// Checks the construction contract: W and X positive definite, X inverts
  /// W to 1e-6*p, W inside the dual box, and the diagonal pinned bitwise.
  /// Throws DomainError on violation.
  void validate(const Problem& prob) const;
};

/// Raised when a solver runs out of its iteration budget; carries the last
/// iterate so callers (path following, CLI) can still use it.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& msg, Estimate last, double achieved_gap)
      : Error(msg), estimate(std::move(last)), achieved_gap(achieved_gap) {}
  Estimate estimate;
  double achieved_gap;
};

/// Raised when an inner solver (lasso coordinate descent, prox Newton)
/// fails to reach its tolerance within its iteration cap.
class InnerConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace covsel
