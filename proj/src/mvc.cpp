#include "pauc/mvc.hpp"

#include <algorithm>
#include <numeric>

#include "pauc/model.hpp"

namespace pauc {

OrderingMatrix MvcResult::matrix() const {
    const int m = counts.m();
    const int k = counts.k();
    OrderingMatrix pi(m, k);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < row_transitions[i]; ++j) {
            pi.at(i, j) = 1;
        }
    }
    return pi;
}

std::vector<int> top_k_negatives(const std::vector<double> &w,
                                 const std::vector<FeatureVector> &negatives, int k) {
    if (k < 1 || k > static_cast<int>(negatives.size())) {
        throw config_error("top-k count outside [1, n]");
    }
    std::vector<double> s = score_all(w, negatives);
    std::vector<int> order(negatives.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&s](int a, int b) { return s[a] > s[b]; });
    order.resize(k);
    return order;
}

namespace {

// Shared core of the margin-rule searches: tracked negatives are the top k
// by w, and the maximizer sets pi_ij = 1 exactly when s+_i - s-_j <= 1.
// Counts and the objective come out of one merged sweep over the positive
// scores and the shifted negative scores.
MvcResult margin_rule_mvc(const std::vector<double> &w, const Dataset &data, int k) {
    data.require_both_classes();
    MvcResult res;
    res.z_indices = top_k_negatives(w, data.negatives, k);

    const int m = data.m();
    std::vector<double> pos_scores = score_all(w, data.positives);

    struct Item {
        double key;
        int idx;
        bool is_neg;
    };
    std::vector<Item> items;
    items.reserve(pos_scores.size() + res.z_indices.size());
    for (int i = 0; i < m; ++i) {
        items.push_back({pos_scores[i], i, false});
    }
    for (int j = 0; j < k; ++j) {
        items.push_back({score(w, data.negatives[res.z_indices[j]]) + 1.0, j, true});
    }
    // Ascending by key; a positive tying a shifted negative key goes first so
    // the boundary pair (margin exactly 1) lands on the pi = 1 side.
    std::sort(items.begin(), items.end(), [](const Item &a, const Item &b) {
        return a.key < b.key || (a.key == b.key && !a.is_neg && b.is_neg);
    });

    res.counts.a_plus.assign(m, 0);
    res.counts.a_minus.assign(k, 0);
    int pos_seen = 0;
    int neg_seen = 0;
    double pos_sum = 0.0;
    double raw_h = 0.0;
    for (const Item &it : items) {
        if (it.is_neg) {
            res.counts.a_minus[it.idx] = m - pos_seen;
            raw_h += pos_seen * it.key - pos_sum;
            ++neg_seen;
        } else {
            res.counts.a_plus[it.idx] = neg_seen;
            ++pos_seen;
            pos_sum += it.key;
        }
    }
    res.h = raw_h / (static_cast<double>(m) * static_cast<double>(k));
    res.row_transitions.resize(m);
    for (int i = 0; i < m; ++i) {
        res.row_transitions[i] = k - res.counts.a_plus[i];
    }
    return res;
}

} // namespace

MvcResult mvc_auc(const std::vector<double> &w, const Dataset &data) {
    return margin_rule_mvc(w, data, data.n());
}

MvcResult mvc_pauc_0beta(const std::vector<double> &w, const Dataset &data, int j_beta) {
    return margin_rule_mvc(w, data, j_beta);
}

MvcResult mvc_pauc_general(const std::vector<double> &w, const Dataset &data,
                           const PositionRange &range) {
    data.require_both_classes();
    if (range.j_lo < 1 || range.j_lo >= range.j_hi || range.j_hi > data.n()) {
        throw config_error("general search needs 1 <= j_lo < j_hi <= n");
    }

    MvcResult res;
    res.z_indices = top_k_negatives(w, data.negatives, range.j_hi);
    const int m = data.m();
    const int k = range.j_hi;
    const int head = range.j_lo;

    std::vector<double> zs(k); // descending
    for (int j = 0; j < k; ++j) {
        zs[j] = score(w, data.negatives[res.z_indices[j]]);
    }
    std::vector<double> prefix(k + 1, 0.0);
    for (int j = 0; j < k; ++j) {
        prefix[j + 1] = prefix[j] + zs[j];
    }

    // Per positive, the maximizing row is one of two step vectors: ones over
    // the head-block negatives scored at or above the positive (no margin),
    // or ones over the whole head block plus the tail-block negatives within
    // margin 1.  Either candidate's length follows from one binary search.
    res.counts.a_plus.assign(m, 0);
    res.counts.a_minus.assign(k, 0);
    res.row_transitions.resize(m);
    std::vector<int> transition_hist(k + 2, 0);
    double raw_h = 0.0;
    std::vector<double> pos_scores = score_all(w, data.positives);
    for (int i = 0; i < m; ++i) {
        const double s = pos_scores[i];

        const int r_a = static_cast<int>(
            std::upper_bound(zs.begin(), zs.begin() + head, s, std::greater<>()) - zs.begin());
        const double h_a = prefix[r_a] - r_a * s;

        const int r_b = static_cast<int>(
            std::upper_bound(zs.begin() + head, zs.begin() + k, s - 1.0, std::greater<>()) -
            zs.begin());
        const double h_b =
            (prefix[head] - head * s) + (prefix[r_b] - prefix[head]) + (r_b - head) * (1.0 - s);

        int r = r_a;
        double h = h_a;
        if (h_b > h_a) { // ties keep the first candidate
            r = r_b;
            h = h_b;
        }
        res.row_transitions[i] = r;
        res.counts.a_plus[i] = k - r;
        ++transition_hist[r];
        raw_h += h;
    }

    int rows_ending_at_or_before = 0;
    for (int j = 0; j < k; ++j) {
        rows_ending_at_or_before += transition_hist[j];
        res.counts.a_minus[j] = rows_ending_at_or_before; // rows with r <= j have pi_ij = 0
    }

    res.h = raw_h / (static_cast<double>(m) * static_cast<double>(range.width()));
    return res;
}

} // namespace pauc
