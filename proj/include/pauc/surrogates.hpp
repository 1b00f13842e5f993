#pragma once

#include <vector>

#include "pauc/dataset.hpp"
#include "pauc/interval.hpp"

namespace pauc {

/// Pairwise hinge relaxation of the pAUC risk over the position range:
/// (1/(m*(j_hi-j_lo))) * sum_i sum_{j in (j_lo, j_hi]} (1 - (s+_i - s-_(j)))+
/// where s-_(j) is the j-th largest negative score under w.  Convex for
/// j_lo = 0, non-convex in general once j_lo >= 1.
double hinge_surrogate(const std::vector<double> &w, const Dataset &data,
                       const PositionRange &range);

double hinge_surrogate(const std::vector<double> &w, const Dataset &data,
                       const FprInterval &iv);

/// Full-AUC hinge surrogate, the j_lo = 0, j_hi = n special case.
double hinge_surrogate_auc(const std::vector<double> &w, const Dataset &data);

/// Tight structural surrogate: the maximum constraint violation
/// max_{Z,pi} loss(pi) - w . dphi(pi) computed by the polynomial search.
/// Equals the hinge surrogate when j_lo = 0.  For j_lo >= 1 neither
/// surrogate dominates the other pointwise; both upper-bound the risk, and
/// the tight one sits between the restricted and plain hinge-plus-eta sums.
double tight_surrogate(const std::vector<double> &w, const Dataset &data,
                       const PositionRange &range);

/// Tail term of the sandwich bounds for the tight surrogate:
/// eta = (1/(m*(j_hi-j_lo))) * sum_i sum_{j <= j_lo} (s-_(j) - s+_i)+,
/// the margin-0 penalty against the head-block negatives.
double eta_head(const std::vector<double> &w, const Dataset &data,
                const PositionRange &range);

/// eta restricted to positives scored strictly below the j_lo-th ranked
/// negative.
double eta_head_restricted(const std::vector<double> &w, const Dataset &data,
                           const PositionRange &range);

/// Hinge surrogate restricted to positives scored strictly below the j_lo-th
/// ranked negative (the lower-bound companion of eta_head_restricted).
double hinge_surrogate_restricted(const std::vector<double> &w, const Dataset &data,
                                  const PositionRange &range);

} // namespace pauc
