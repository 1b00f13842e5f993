#include "pauc/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "pauc/errors.hpp"
#include "pauc/json_io.hpp"

namespace pauc {

namespace {

void require_scores(const std::vector<double> &pos, const std::vector<double> &neg) {
    if (pos.empty()) {
        throw empty_class_error("no positive scores");
    }
    if (neg.empty()) {
        throw empty_class_error("no negative scores");
    }
}

// Count of values in the ascending range that are strictly below s.
std::size_t count_below(const std::vector<double> &ascending, double s) {
    return static_cast<std::size_t>(
        std::lower_bound(ascending.begin(), ascending.end(), s) - ascending.begin());
}

// Count of values in the ascending range that are strictly above s.
std::size_t count_above(const std::vector<double> &ascending, double s) {
    return ascending.size() -
           static_cast<std::size_t>(
               std::upper_bound(ascending.begin(), ascending.end(), s) - ascending.begin());
}

} // namespace

double empirical_auc(const std::vector<double> &pos_scores,
                     const std::vector<double> &neg_scores) {
    require_scores(pos_scores, neg_scores);
    std::vector<double> neg_asc(neg_scores);
    std::sort(neg_asc.begin(), neg_asc.end());
    std::size_t correct = 0;
    for (double sp : pos_scores) {
        correct += count_below(neg_asc, sp); // ties count as misrankings
    }
    return static_cast<double>(correct) /
           (static_cast<double>(pos_scores.size()) * static_cast<double>(neg_scores.size()));
}

double empirical_pauc_positions(const std::vector<double> &pos_scores,
                                const std::vector<double> &neg_scores,
                                const PositionRange &range) {
    require_scores(pos_scores, neg_scores);
    const int n = static_cast<int>(neg_scores.size());
    if (!(0 <= range.j_lo && range.j_lo < range.j_hi && range.j_hi <= n)) {
        throw config_error("position range outside the ranked negatives");
    }
    // j-th largest negative score, ties kept in input order.
    std::vector<double> ranked(neg_scores);
    std::stable_sort(ranked.begin(), ranked.end(), std::greater<>());
    std::vector<double> window(ranked.begin() + range.j_lo, ranked.begin() + range.j_hi);
    std::sort(window.begin(), window.end());
    std::size_t correct = 0;
    for (double sp : pos_scores) {
        correct += count_below(window, sp);
    }
    return static_cast<double>(correct) /
           (static_cast<double>(pos_scores.size()) * static_cast<double>(range.width()));
}

double empirical_pauc(const std::vector<double> &pos_scores,
                      const std::vector<double> &neg_scores, const FprInterval &iv) {
    require_scores(pos_scores, neg_scores);
    return empirical_pauc_positions(pos_scores, neg_scores,
                                    positions_for(iv, static_cast<int>(neg_scores.size())));
}

double pauc_risk(const std::vector<double> &pos_scores,
                 const std::vector<double> &neg_scores, const FprInterval &iv) {
    return 1.0 - empirical_pauc(pos_scores, neg_scores, iv);
}

std::vector<RocPoint> roc_curve(const std::vector<double> &pos_scores,
                                const std::vector<double> &neg_scores) {
    require_scores(pos_scores, neg_scores);
    std::vector<double> pos_asc(pos_scores), neg_asc(neg_scores);
    std::sort(pos_asc.begin(), pos_asc.end());
    std::sort(neg_asc.begin(), neg_asc.end());

    std::vector<double> thresholds;
    thresholds.reserve(pos_asc.size() + neg_asc.size());
    thresholds.insert(thresholds.end(), pos_asc.begin(), pos_asc.end());
    thresholds.insert(thresholds.end(), neg_asc.begin(), neg_asc.end());
    std::sort(thresholds.begin(), thresholds.end(), std::greater<>());
    thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

    const double m = static_cast<double>(pos_asc.size());
    const double n = static_cast<double>(neg_asc.size());
    std::vector<RocPoint> curve;
    curve.reserve(thresholds.size() + 1);
    // Classification is score > threshold; the largest score yields (0, 0).
    for (double t : thresholds) {
        curve.push_back({static_cast<double>(count_above(neg_asc, t)) / n,
                         static_cast<double>(count_above(pos_asc, t)) / m});
    }
    curve.push_back({1.0, 1.0});
    return curve;
}

double roc_auc(const std::vector<RocPoint> &curve) {
    double area = 0.0;
    for (std::size_t i = 1; i < curve.size(); ++i) {
        area += (curve[i].fpr - curve[i - 1].fpr) * (curve[i].tpr + curve[i - 1].tpr) / 2.0;
    }
    return area;
}

double tpr_at_fpr(const std::vector<double> &pos_scores,
                  const std::vector<double> &neg_scores, double fpr_limit) {
    require_scores(pos_scores, neg_scores);
    if (!(fpr_limit >= 0.0 && fpr_limit <= 1.0)) {
        throw config_error("FPR limit must lie in [0, 1]");
    }
    const int n = static_cast<int>(neg_scores.size());
    // FPR(t) <= limit admits at most k negatives strictly above t, so the
    // smallest feasible threshold is the (k+1)-th largest negative score.
    const int k = static_cast<int>(std::floor(n * fpr_limit));
    if (k >= n) {
        return 1.0;
    }
    std::vector<double> ranked(neg_scores);
    std::stable_sort(ranked.begin(), ranked.end(), std::greater<>());
    const double threshold = ranked[k];
    std::size_t admitted = 0;
    for (double sp : pos_scores) {
        if (sp > threshold) {
            ++admitted;
        }
    }
    return static_cast<double>(admitted) / static_cast<double>(pos_scores.size());
}

std::string roc_to_csv(const std::vector<RocPoint> &curve) {
    std::string out = "fpr,tpr\n";
    for (const RocPoint &p : curve) {
        out += jsonio::number(p.fpr);
        out += ',';
        out += jsonio::number(p.tpr);
        out += '\n';
    }
    return out;
}

} // namespace pauc
