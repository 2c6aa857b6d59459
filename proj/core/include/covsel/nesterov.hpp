#pragma once

#include "covsel/types.hpp"

#include <limits>

namespace covsel {

/// Constants of the smoothed formulation over the spectral box
/// Q1 = {a I <= X <= b I} and the unit sup-norm ball scaled by the penalty.
///   sigma1 = 1/b^2, sigma2 = 1, D1 = p log(b/a), D2 = p^2/2, M = 1/a^2,
///   A_norm = max penalty entry, mu = epsilon / (2 D2),
///   L = M + A_norm^2 / (mu sigma2)  (the Lipschitz constant of the
///   smoothed gradient; equivalently M + 2 D2 A_norm^2 / (sigma2 epsilon)).
struct SmoothingConstants {
  double mu;
  double L;
  double sigma1;
  double sigma2;
  double D1;
  double D2;
  double M;
  double A_norm;

  static SmoothingConstants compute(Index p, double a, double b,
                                    double a_norm, double epsilon);
};

struct NesterovDiagnostics {
  std::vector<double> smoothed_objective;  // f-tilde(y_k) per step
  std::vector<double> gap_history;         // measured gap at each check
  double min_iterate_eig = std::numeric_limits<double>::infinity();
  double max_iterate_eig = -std::numeric_limits<double>::infinity();
  long steps = 0;
};

struct NesterovOptions {
  /// Spectral bounds; defaults come from eigenvalue_bounds(prob).  Tighter
  /// valid bounds speed the method up considerably.
  std::optional<double> a;
  std::optional<double> b;
  std::optional<double> epsilon;  // gap target; defaults to prob.epsilon
  long max_steps = -1;            // -1: 4 * iteration_bound(...)
  int gap_check_every = 50;
  NesterovDiagnostics* diagnostics = nullptr;
};

/// Gradient of the smoothed objective
///   f~(x) = -log det x + <S, x> + sum_ij psi_mu(lambda x_ij),
/// psi_mu the Moreau-smoothed absolute value:
///   grad = -x^-1 + S + clip(lambda^2 x / mu, [-lambda, lambda]).
Matrix smoothed_gradient(const Matrix& x, const Matrix& S, double lambda,
                         double mu);

/// Elementwise-penalty variant used by problems with a diagonal override.
Matrix smoothed_gradient(const Matrix& x, const Matrix& S,
                         const Matrix& penalty, double mu);

/// Smoothed objective value (test / diagnostic helper).
double smoothed_objective(const Matrix& x, const Matrix& S,
                          const Matrix& penalty, double mu);

/// Frobenius projection onto {a I <= X <= b I}: eigenvalues clamped
/// into [a, b], basis kept.
Matrix project_spectral_box(const Matrix& g, double a, double b);

/// argmin over the spectral box of (L/sigma1)(-log det X + p log b) + <G, X>,
/// computed in G's eigenbasis: eigenvalue (L/sigma1)/g_i clamped to [a, b]
/// when g_i > 0, and b when g_i <= 0.
Matrix prox_center_step(const Matrix& accumulated_grad, double L,
                        double sigma1, double a, double b);

/// A priori step bound:
///   ceil( 4 ||A|| sqrt(D1 D2 / (sigma1 sigma2)) / eps
///         + sqrt(M D1 / (sigma1 eps)) ).
long iteration_bound(Index p, double a, double b, double lambda,
                     double epsilon);

/// Smoothed accelerated first-order method on the primal, with the duality
/// gap (measured on the clipped dual-feasible certificate) as the stopping
/// rule.  Returns the certified pair: W clipped into the dual box with the
/// diagonal pinned exactly, X = W^-1.
Estimate solve_nesterov(const Problem& prob, const NesterovOptions& opts = {});

}  // namespace covsel
