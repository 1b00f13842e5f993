#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "pauc/dataset.hpp"
#include "pauc/interval.hpp"
#include "pauc/ordering.hpp"

namespace pauc {

/// Exhaustive reference implementations used to certify the polynomial
/// search routines at desk scale.  Every routine here enumerates orderings
/// explicitly and shares no code with the fast paths it checks.

/// All distinct ordering matrices realizable by some total order of m
/// positives and k negatives (deduplicated over the (m+k)! permutations).
/// Guard: m + k <= 8.
std::vector<OrderingMatrix> enumerate_valid_orderings(int m, int k);

struct BruteMvcResult {
    std::vector<int> z_indices;  // tracked negatives, in the maximizing order
    OrderingMatrix matrix;       // maximizing ordering over them
    OrderingCounts counts;
    double h = 0.0;
};

/// Exhaustive most-violated-constraint search: every size-j_hi subset of the
/// negatives, every realizable ordering over it, loss per kind (delta_auc or
/// the truncated pAUC discrepancy read off the ordering's own negative
/// ranking).  Guard: m + j_hi <= 8.
BruteMvcResult brute_mvc(const std::vector<double> &w, const Dataset &data,
                         const PositionRange &range, LossKind kind);

/// Structural surrogate over full n-column orderings with the whole-sample
/// feature map (1/(m*n) normalization) and the truncated loss read off each
/// ordering's own negative ranking.  Guard: m + n <= 8.
double naive_struct_surrogate(const std::vector<double> &w, const Dataset &data,
                              const PositionRange &range);

/// Max over an even lambda grid of f(lambda*w1 + (1-lambda)*w2)
/// - lambda*f(w1) - (1-lambda)*f(w2); positive values witness non-convexity.
double convexity_probe(const std::function<double(const std::vector<double> &)> &f,
                       const std::vector<double> &w1, const std::vector<double> &w2,
                       int samples);

/// Seeded desk-scale instance generator: standard normal features,
/// dimension <= 4.
struct RandomInstance {
    Dataset data;
    std::vector<double> w;
};

RandomInstance random_instance(std::uint64_t seed, int m, int n, int dim);

} // namespace pauc
