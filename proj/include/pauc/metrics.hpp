#pragma once

#include <vector>

#include "pauc/interval.hpp"

namespace pauc {

/// Fraction of positive/negative score pairs ranked correctly; ties count as
/// misrankings.  Range [0, 1].
double empirical_auc(const std::vector<double> &pos_scores,
                     const std::vector<double> &neg_scores);

/// Partial AUC over the FPR interval: the correctly-ranked fraction of pairs
/// formed with the negatives at ranked positions (j_alpha, j_beta], where
/// negatives are sorted by decreasing score (ties kept in input order).
double empirical_pauc(const std::vector<double> &pos_scores,
                      const std::vector<double> &neg_scores, const FprInterval &iv);

/// 1 - empirical_pauc.
double pauc_risk(const std::vector<double> &pos_scores,
                 const std::vector<double> &neg_scores, const FprInterval &iv);

/// Position-range variant used internally: pairs with negatives ranked in
/// (j_lo, j_hi].
double empirical_pauc_positions(const std::vector<double> &pos_scores,
                                const std::vector<double> &neg_scores,
                                const PositionRange &range);

struct RocPoint {
    double fpr;
    double tpr;
};

/// ROC staircase: one point per distinct score threshold (strictly-greater
/// classification), descending thresholds, starting at (0,0) and ending at
/// (1,1).  fpr and tpr are non-decreasing along the curve.
std::vector<RocPoint> roc_curve(const std::vector<double> &pos_scores,
                                const std::vector<double> &neg_scores);

/// Trapezoid area under the ROC staircase; equals empirical_auc when no
/// positive score ties a negative score.
double roc_auc(const std::vector<RocPoint> &curve);

/// TPR of the classifier thresholded at the smallest threshold whose
/// empirical FPR is <= fpr_limit.
double tpr_at_fpr(const std::vector<double> &pos_scores,
                  const std::vector<double> &neg_scores, double fpr_limit);

/// "fpr,tpr" CSV rendering of the staircase, floats at 17 significant digits.
std::string roc_to_csv(const std::vector<RocPoint> &curve);

} // namespace pauc
