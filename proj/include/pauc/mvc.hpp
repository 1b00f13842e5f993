#pragma once

#include <vector>

#include "pauc/dataset.hpp"
#include "pauc/interval.hpp"
#include "pauc/ordering.hpp"

namespace pauc {

/// Result of a most-violated-constraint search.  z_indices lists the tracked
/// negatives in descending-score order under w; counts describe the
/// maximizing ordering; row_transitions[i] is the number of leading ones in
/// row i (every maximizer produced here is a step vector in that column
/// order, so a_plus[i] == k - row_transitions[i]); h is the achieved
/// objective loss(pi) - w . dphi(pi), always >= 0 because the all-zeros
/// ordering scores 0.
struct MvcResult {
    std::vector<int> z_indices;
    OrderingCounts counts;
    std::vector<int> row_transitions;
    double h = 0.0;

    OrderingMatrix matrix() const;
};

/// Indices of the k highest-scoring negatives under w, in descending score
/// order; ties broken by original index (stable).
std::vector<int> top_k_negatives(const std::vector<double> &w,
                                 const std::vector<FeatureVector> &negatives, int k);

/// Most violated constraint for the full-AUC surrogate: pi_ij = 1 iff
/// w.x+_i - w.x-_j <= 1.  Counts are accumulated from one merged sort of the
/// positive scores and the shifted negative scores, O((m+n) log(m+n)).
MvcResult mvc_auc(const std::vector<double> &w, const Dataset &data);

/// Most violated constraint for the [0, beta] surrogate: tracks the top
/// j_beta negatives by w and applies the same margin rule over them.
MvcResult mvc_pauc_0beta(const std::vector<double> &w, const Dataset &data, int j_beta);

/// Most violated constraint for the truncated [alpha, beta] loss with
/// j_alpha >= 1: per-positive two-candidate row search over step vectors in
/// w-sorted column order, O(m * j_beta) after the top-k selection.  Ties
/// between the two candidates keep the first (the head-block candidate).
MvcResult mvc_pauc_general(const std::vector<double> &w, const Dataset &data,
                           const PositionRange &range);

} // namespace pauc
