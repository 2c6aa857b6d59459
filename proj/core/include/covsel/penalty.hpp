#pragma once

#include "covsel/types.hpp"

namespace covsel {
namespace stats {

/// Regularized incomplete beta function I_x(a, b) via the standard
/// continued fraction (modified Lentz).
double regularized_incomplete_beta(double a, double b, double x);

double student_t_pdf(double t, long dof);
/// P(T_dof <= t)
double student_t_cdf(double t, long dof);
/// Upper-tail quantile: t with P(T_dof > t) = prob_upper.  Bracketed
/// bisection refined by Newton steps; accurate to ~1e-12.
double student_t_quantile(double prob_upper, long dof);

/// Upper-tail standard normal quantile: z with P(Z > z) = prob_upper.
double normal_upper_quantile(double prob_upper);

/// P(chi^2_1 > c)
double chi2_upper_tail_1dof(double c);
/// Upper-tail quantile of the chi-square distribution with one degree of
/// freedom: the square of the normal upper quantile at prob_upper / 2.
double chi2_quantile_1dof(double prob_upper);

}  // namespace stats

enum class PenaltyFamily { GaussianT, BinaryChi2 };

struct PenaltyChoice {
  double alpha = 0.0;
  double lambda = 0.0;
  PenaltyFamily family = PenaltyFamily::GaussianT;
  double quantile_value = 0.0;     // the t or chi-square point used
  bool relaxed_bonferroni = false; // true: the quantile argument is alpha
                                   // itself instead of alpha / (2 p^2)
  double pair_stat = 0.0;          // max (Gaussian) / min (binary) sigma_i sigma_j
  std::string warning;             // degenerate-variance note, if any
};

/// Error-controlling penalty for Gaussian data:
///   lambda = (max_{i>j} sigma_i sigma_j) * t_{n-2}(q) / sqrt(n-2 + t^2),
/// q = alpha/(2 p^2), or alpha when relaxed.
PenaltyChoice gaussian_lambda(const SecondMoment& moment, double alpha,
                              bool relaxed = false);

/// Binary counterpart:
///   lambda = sqrt(chi2_1(q)) / ((min_{i>j} sigma_i sigma_j) sqrt(n)).
/// Note the min over pairs, in contrast to the Gaussian max.
PenaltyChoice binary_lambda(const SecondMoment& moment, double alpha,
                            bool relaxed = false);

}  // namespace covsel
