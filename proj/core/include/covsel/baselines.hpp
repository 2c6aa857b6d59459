#pragma once

#include "covsel/types.hpp"

#include <set>
#include <utility>

namespace covsel {

/// Off-diagonal support of a symmetric matrix as a set of unordered pairs,
/// stored canonically as (min, max).
struct SparsityPattern {
  Index p = 0;
  std::set<std::pair<Index, Index>> edges;

  bool contains(Index i, Index j) const {
    if (i == j) return false;
    return edges.count({std::min(i, j), std::max(i, j)}) > 0;
  }
  std::size_t size() const { return edges.size(); }
  void insert(Index i, Index j);
  bool subset_of(const SparsityPattern& other) const;
};

struct ClassificationReport {
  double power = 1.0;      // recovered fraction of true edges
  double ppv = 1.0;        // correct fraction of estimated edges
  double density = 0.0;    // estimated edges / (p(p-1)/2)
  double error_pct = 0.0;  // misclassified ordered off-diagonal entries / p^2
};

SparsityPattern pattern_of(const Matrix& x, double threshold);

struct ThresholdReport {
  SparsityPattern pattern;
  /// Largest threshold that provably keeps S^-1 positive definite,
  /// evaluated over the signed basis pairs (+-e_i, (+-e_i +- e_j)/2).
  double pd_threshold_bound = 0.0;
  bool threshold_safe = false;
};

/// Support of S^-1 thresholded at t, with the positive-definiteness report.
ThresholdReport threshold_inverse(const SecondMoment& moment, double t);

enum class EdgeRule { Or, And };

/// Neighborhood selection: one lasso regression of each variable on the
/// rest (in Gram form, penalty lambda), edges by the OR/AND rule on
/// coefficient support.  Zero-variance columns regress to all-zero
/// coefficients and get a note in `warnings`.
SparsityPattern neighborhood_select(const SecondMoment& moment, double lambda,
                                    EdgeRule rule,
                                    std::vector<std::string>* warnings = nullptr);

ClassificationReport classification_report(const SparsityPattern& estimated,
                                           const SparsityPattern& truth);

}  // namespace covsel
