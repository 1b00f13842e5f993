#include "pauc/ordering.hpp"

#include <numeric>

namespace pauc {

OrderingCounts counts_from_matrix(const OrderingMatrix &pi) {
    OrderingCounts counts;
    counts.a_plus.assign(pi.m, 0);
    counts.a_minus.assign(pi.k, 0);
    for (int i = 0; i < pi.m; ++i) {
        for (int j = 0; j < pi.k; ++j) {
            if (pi.at(i, j) == 0) {
                ++counts.a_plus[i];  // negative j ranked below positive i
                ++counts.a_minus[j]; // equivalently, positive i above negative j
            }
        }
    }
    return counts;
}

double constraint_h(const Constraint &c, const std::vector<double> &w) {
    double dot = 0.0;
    for (std::size_t f = 0; f < c.dphi.size(); ++f) {
        dot += w[f] * c.dphi[f];
    }
    return c.loss - dot;
}

namespace {

void check_counts(const std::vector<FeatureVector> &positives, const std::vector<int> &z_indices,
                  const OrderingCounts &counts) {
    if (counts.a_plus.size() != positives.size() ||
        counts.a_minus.size() != z_indices.size()) {
        throw data_error("ordering counts do not match the instance lists");
    }
}

// accum += scale * x
void axpy(std::vector<double> &accum, double scale, const FeatureVector &x) {
    for (const auto &e : x.entries) {
        accum[e.index] += scale * e.value;
    }
}

} // namespace

std::vector<double> joint_feature_map(const std::vector<FeatureVector> &positives,
                                      const std::vector<FeatureVector> &negatives,
                                      const std::vector<int> &z_indices,
                                      const OrderingCounts &counts, std::uint32_t dim) {
    check_counts(positives, z_indices, counts);
    const double norm =
        1.0 / (static_cast<double>(positives.size()) * static_cast<double>(z_indices.size()));
    std::vector<double> phi(dim, 0.0);
    for (std::size_t i = 0; i < positives.size(); ++i) {
        axpy(phi, norm * counts.a_plus[i], positives[i]);
    }
    for (std::size_t j = 0; j < z_indices.size(); ++j) {
        axpy(phi, -norm * counts.a_minus[j], negatives[z_indices[j]]);
    }
    return phi;
}

double delta_auc(const OrderingCounts &counts) {
    const int m = counts.m();
    double misranked = 0.0;
    for (int aj : counts.a_minus) {
        misranked += m - aj;
    }
    return misranked / (static_cast<double>(m) * static_cast<double>(counts.k()));
}

double delta_pauc_tr(const OrderingCounts &counts, const PositionRange &range) {
    if (range.j_hi > counts.k()) {
        throw data_error("position range exceeds the tracked negatives");
    }
    const int m = counts.m();
    double misranked = 0.0;
    for (int j = range.j_lo; j < range.j_hi; ++j) {
        misranked += m - counts.a_minus[j];
    }
    return misranked / (static_cast<double>(m) * static_cast<double>(range.width()));
}

Constraint build_constraint(const std::vector<FeatureVector> &positives,
                            const std::vector<FeatureVector> &negatives,
                            const std::vector<int> &z_indices, const OrderingCounts &counts,
                            LossKind kind, const PositionRange &range, std::uint32_t dim) {
    check_counts(positives, z_indices, counts);
    const int m = counts.m();
    const int k = counts.k();

    // dphi = phi(pi*) - phi(pi); under pi* every a_plus is k and every
    // a_minus is m.  The truncated loss lives on the 1/(m*(j_hi-j_lo)) axis,
    // so its feature term must too, otherwise H would mix scales.
    const double norm = (kind == LossKind::auc)
                            ? 1.0 / (static_cast<double>(m) * static_cast<double>(k))
                            : 1.0 / (static_cast<double>(m) * static_cast<double>(range.width()));

    Constraint c;
    c.loss = (kind == LossKind::auc) ? delta_auc(counts) : delta_pauc_tr(counts, range);
    c.dphi.assign(dim, 0.0);
    for (int i = 0; i < m; ++i) {
        axpy(c.dphi, norm * (k - counts.a_plus[i]), positives[i]);
    }
    for (int j = 0; j < k; ++j) {
        axpy(c.dphi, -norm * (m - counts.a_minus[j]), negatives[z_indices[j]]);
    }
    return c;
}

} // namespace pauc
