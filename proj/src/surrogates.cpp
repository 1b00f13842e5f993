#include "pauc/surrogates.hpp"

#include <algorithm>

#include "pauc/model.hpp"
#include "pauc/mvc.hpp"

namespace pauc {

namespace {

double positive_part(double v) { return v > 0.0 ? v : 0.0; }

// Negative scores sorted descending, ties kept in input order.
std::vector<double> ranked_negative_scores(const std::vector<double> &w, const Dataset &data) {
    std::vector<double> s = score_all(w, data.negatives);
    std::stable_sort(s.begin(), s.end(), std::greater<>());
    return s;
}

void check_range(const PositionRange &range, int n) {
    if (!(0 <= range.j_lo && range.j_lo < range.j_hi && range.j_hi <= n)) {
        throw config_error("position range outside the ranked negatives");
    }
}

} // namespace

double hinge_surrogate(const std::vector<double> &w, const Dataset &data,
                       const PositionRange &range) {
    data.require_both_classes();
    check_range(range, data.n());
    std::vector<double> ranked = ranked_negative_scores(w, data);
    double total = 0.0;
    for (const FeatureVector &x : data.positives) {
        const double sp = score(w, x);
        for (int j = range.j_lo; j < range.j_hi; ++j) {
            total += positive_part(1.0 - (sp - ranked[j]));
        }
    }
    return total / (static_cast<double>(data.m()) * static_cast<double>(range.width()));
}

double hinge_surrogate(const std::vector<double> &w, const Dataset &data,
                       const FprInterval &iv) {
    return hinge_surrogate(w, data, positions_for(iv, data.n()));
}

double hinge_surrogate_auc(const std::vector<double> &w, const Dataset &data) {
    return hinge_surrogate(w, data, PositionRange{0, data.n()});
}

double tight_surrogate(const std::vector<double> &w, const Dataset &data,
                       const PositionRange &range) {
    check_range(range, data.n());
    if (range.j_lo == 0) {
        return mvc_pauc_0beta(w, data, range.j_hi).h;
    }
    return mvc_pauc_general(w, data, range).h;
}

double eta_head(const std::vector<double> &w, const Dataset &data, const PositionRange &range) {
    data.require_both_classes();
    check_range(range, data.n());
    std::vector<double> ranked = ranked_negative_scores(w, data);
    double total = 0.0;
    for (const FeatureVector &x : data.positives) {
        const double sp = score(w, x);
        for (int j = 0; j < range.j_lo; ++j) {
            total += positive_part(ranked[j] - sp);
        }
    }
    return total / (static_cast<double>(data.m()) * static_cast<double>(range.width()));
}

double eta_head_restricted(const std::vector<double> &w, const Dataset &data,
                           const PositionRange &range) {
    data.require_both_classes();
    check_range(range, data.n());
    if (range.j_lo < 1) {
        throw config_error("restricted tail term needs j_lo >= 1");
    }
    std::vector<double> ranked = ranked_negative_scores(w, data);
    const double cutoff = ranked[range.j_lo - 1];
    double total = 0.0;
    for (const FeatureVector &x : data.positives) {
        const double sp = score(w, x);
        if (sp >= cutoff) {
            continue;
        }
        for (int j = 0; j < range.j_lo; ++j) {
            total += positive_part(ranked[j] - sp);
        }
    }
    return total / (static_cast<double>(data.m()) * static_cast<double>(range.width()));
}

double hinge_surrogate_restricted(const std::vector<double> &w, const Dataset &data,
                                  const PositionRange &range) {
    data.require_both_classes();
    check_range(range, data.n());
    if (range.j_lo < 1) {
        throw config_error("restricted hinge needs j_lo >= 1");
    }
    std::vector<double> ranked = ranked_negative_scores(w, data);
    const double cutoff = ranked[range.j_lo - 1];
    double total = 0.0;
    for (const FeatureVector &x : data.positives) {
        const double sp = score(w, x);
        if (sp >= cutoff) {
            continue;
        }
        for (int j = range.j_lo; j < range.j_hi; ++j) {
            total += positive_part(1.0 - (sp - ranked[j]));
        }
    }
    return total / (static_cast<double>(data.m()) * static_cast<double>(range.width()));
}

} // namespace pauc
