#pragma once

#include <cstdint>
#include <vector>

#include "pauc/dataset.hpp"
#include "pauc/interval.hpp"

namespace pauc {

/// Dense m x k binary ordering matrix: entry (i, j) is 1 iff positive i is
/// ranked below the j-th tracked negative.
struct OrderingMatrix {
    int m = 0;
    int k = 0;
    std::vector<std::uint8_t> bits; // row-major, size m*k

    OrderingMatrix() = default;
    OrderingMatrix(int m_, int k_) : m(m_), k(k_), bits(static_cast<std::size_t>(m_) * k_, 0) {}

    std::uint8_t &at(int i, int j) { return bits[static_cast<std::size_t>(i) * k + j]; }
    std::uint8_t at(int i, int j) const { return bits[static_cast<std::size_t>(i) * k + j]; }

    bool operator==(const OrderingMatrix &) const = default;
};

/// Compact ordering representation: a_plus[i] counts tracked negatives ranked
/// below positive i, a_minus[j] counts positives ranked above the j-th tracked
/// negative.  Both index the tracked negatives in descending-score order under
/// the weight vector that produced them.  sum(a_plus) == sum(a_minus).
struct OrderingCounts {
    std::vector<int> a_plus;  // size m, values in [0, k]
    std::vector<int> a_minus; // size k, values in [0, m]

    int m() const { return static_cast<int>(a_plus.size()); }
    int k() const { return static_cast<int>(a_minus.size()); }

    bool operator==(const OrderingCounts &) const = default;
};

OrderingCounts counts_from_matrix(const OrderingMatrix &pi);

/// Which discrete loss a constraint carries.
enum class LossKind { auc, pauc_tr };

/// One cutting-plane row: H_w = loss - w . dphi.
struct Constraint {
    double loss = 0.0;
    std::vector<double> dphi;
};

double constraint_h(const Constraint &c, const std::vector<double> &w);

/// Joint feature map phi((S+, Z), pi) = (1/(m*k)) * [sum_i a_plus[i]*x+_i -
/// sum_j a_minus[j]*z_j], the matrix-free form of the (1-pi_ij)-weighted
/// pairwise difference sum.  z_indices selects the tracked negatives, in the
/// same order the counts were computed in.
std::vector<double> joint_feature_map(const std::vector<FeatureVector> &positives,
                                      const std::vector<FeatureVector> &negatives,
                                      const std::vector<int> &z_indices,
                                      const OrderingCounts &counts, std::uint32_t dim);

/// AUC discrepancy of pi against the all-zeros ordering over the tracked
/// negatives: (1/(m*k)) * sum_j (m - a_minus[j]).  Range [0, 1].
double delta_auc(const OrderingCounts &counts);

/// Truncated pAUC discrepancy: (1/(m*(j_hi-j_lo))) * sum over ranked
/// positions j in (j_lo, j_hi] of (m - a_minus[j]).  Requires k >= j_hi.
/// With j_lo = 0 and j_hi = k this equals delta_auc.  Range [0, 1].
double delta_pauc_tr(const OrderingCounts &counts, const PositionRange &range);

/// Assembles the cutting-plane constraint for the ordering described by
/// counts.  loss is delta_auc or delta_pauc_tr per kind; dphi is
/// phi(pi*) - phi(pi) normalized by 1/(m*k) for kind auc and by
/// 1/(m*(j_hi-j_lo)) for kind pauc_tr, matching the scaling under which the
/// truncated loss and the feature map live on the same axis.
Constraint build_constraint(const std::vector<FeatureVector> &positives,
                            const std::vector<FeatureVector> &negatives,
                            const std::vector<int> &z_indices, const OrderingCounts &counts,
                            LossKind kind, const PositionRange &range, std::uint32_t dim);

} // namespace pauc
