#include "pauc/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "pauc/model.hpp"

namespace pauc {

namespace {

// Ordering matrix of one total order: items[p] for p = 0.. ranks highest
// first; ids < m are positives, id m+j is tracked negative j.
OrderingMatrix matrix_of_permutation(const std::vector<int> &items, int m, int k) {
    OrderingMatrix pi(m, k);
    std::vector<int> negs_above;
    negs_above.reserve(k);
    for (int id : items) {
        if (id < m) {
            for (int j : negs_above) {
                pi.at(id, j) = 1;
            }
        } else {
            negs_above.push_back(id - m);
        }
    }
    return pi;
}

} // namespace

std::vector<OrderingMatrix> enumerate_valid_orderings(int m, int k) {
    if (m < 1 || k < 1 || m + k > 8) {
        throw size_guard_error("ordering enumeration is limited to m + k <= 8");
    }
    const int bits = m * k;
    std::vector<bool> seen(static_cast<std::size_t>(1) << bits, false);

    std::vector<int> items(m + k);
    std::iota(items.begin(), items.end(), 0);
    std::vector<OrderingMatrix> result;
    do {
        OrderingMatrix pi = matrix_of_permutation(items, m, k);
        std::uint32_t mask = 0;
        for (int b = 0; b < bits; ++b) {
            mask |= static_cast<std::uint32_t>(pi.bits[b]) << b;
        }
        if (!seen[mask]) {
            seen[mask] = true;
            result.push_back(std::move(pi));
        }
    } while (std::next_permutation(items.begin(), items.end()));

    // Canonical output order: by bit mask.
    std::sort(result.begin(), result.end(), [](const OrderingMatrix &a, const OrderingMatrix &b) {
        return a.bits < b.bits;
    });
    return result;
}

namespace {

// One exhaustive scan: for a fixed tracked subset (given by neg_scores in
// subset order) walk every permutation and keep the best objective.  The
// objective is norm_loss * (truncated misranking count) minus
// norm_phi * (w-weighted pairwise term); window positions are 1-based over
// each permutation's own negative ranking.
struct ScanBest {
    double h;
    std::vector<int> items; // maximizing permutation
};

ScanBest scan_permutations(const std::vector<double> &pos_scores,
                           const std::vector<double> &neg_scores, int window_lo, int window_hi,
                           bool full_loss, double norm_loss, double norm_phi) {
    const int m = static_cast<int>(pos_scores.size());
    const int k = static_cast<int>(neg_scores.size());
    const double pos_total = std::accumulate(pos_scores.begin(), pos_scores.end(), 0.0);

    std::vector<int> items(m + k);
    std::iota(items.begin(), items.end(), 0);

    ScanBest best{-1.0, {}};
    do {
        int pos_seen = 0;
        int neg_rank = 0;
        double pos_sum_seen = 0.0;
        double loss_raw = 0.0;
        double phi_raw = 0.0;
        for (int id : items) {
            if (id < m) {
                ++pos_seen;
                pos_sum_seen += pos_scores[id];
                continue;
            }
            ++neg_rank;
            const int below = m - pos_seen;
            if (full_loss || (neg_rank > window_lo && neg_rank <= window_hi)) {
                loss_raw += below;
            }
            // sum over positives below this negative of (s+_i - s_z)
            phi_raw += (pos_total - pos_sum_seen) - below * neg_scores[id - m];
        }
        const double h = norm_loss * loss_raw - norm_phi * phi_raw;
        if (h > best.h) {
            best.h = h;
            best.items = items;
        }
    } while (std::next_permutation(items.begin(), items.end()));
    return best;
}

} // namespace

BruteMvcResult brute_mvc(const std::vector<double> &w, const Dataset &data,
                         const PositionRange &range, LossKind kind) {
    data.require_both_classes();
    const int m = data.m();
    const int n = data.n();
    const int k = range.j_hi;
    if (!(range.j_lo >= 0 && range.j_lo < k && k <= n)) {
        throw config_error("position range outside the negatives");
    }
    if (m + k > 8) {
        throw size_guard_error("exhaustive search is limited to m + j_hi <= 8");
    }

    const std::vector<double> pos_scores = score_all(w, data.positives);
    const std::vector<double> all_neg_scores = score_all(w, data.negatives);

    const double norm = (kind == LossKind::auc)
                            ? 1.0 / (static_cast<double>(m) * static_cast<double>(k))
                            : 1.0 / (static_cast<double>(m) * static_cast<double>(range.width()));
    const bool full_loss = kind == LossKind::auc;

    BruteMvcResult best;
    best.h = -1.0;

    // Every size-k subset of the negatives, as a sorted index selection.
    std::vector<int> subset(k);
    std::iota(subset.begin(), subset.end(), 0);
    std::vector<int> best_subset;
    std::vector<int> best_items;
    while (true) {
        std::vector<double> neg_scores(k);
        for (int j = 0; j < k; ++j) {
            neg_scores[j] = all_neg_scores[subset[j]];
        }
        ScanBest scan = scan_permutations(pos_scores, neg_scores, range.j_lo, range.j_hi,
                                          full_loss, norm, norm);
        if (scan.h > best.h) {
            best.h = scan.h;
            best_subset = subset;
            best_items = std::move(scan.items);
        }

        // next combination
        int pos = k - 1;
        while (pos >= 0 && subset[pos] == n - k + pos) {
            --pos;
        }
        if (pos < 0) {
            break;
        }
        ++subset[pos];
        for (int q = pos + 1; q < k; ++q) {
            subset[q] = subset[q - 1] + 1;
        }
    }

    // Report the tracked negatives in the maximizing permutation's own rank
    // order, with the matrix columns matching that order.
    std::vector<int> local_order;
    for (int id : best_items) {
        if (id >= m) {
            local_order.push_back(id - m);
        }
    }
    for (int j : local_order) {
        best.z_indices.push_back(best_subset[j]);
    }
    std::vector<int> column_of_local(k);
    for (int col = 0; col < k; ++col) {
        column_of_local[local_order[col]] = col;
    }
    OrderingMatrix raw = matrix_of_permutation(best_items, m, k);
    best.matrix = OrderingMatrix(m, k);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < k; ++j) {
            best.matrix.at(i, column_of_local[j]) = raw.at(i, j);
        }
    }
    best.counts = counts_from_matrix(best.matrix);
    return best;
}

double naive_struct_surrogate(const std::vector<double> &w, const Dataset &data,
                              const PositionRange &range) {
    data.require_both_classes();
    const int m = data.m();
    const int n = data.n();
    if (!(range.j_lo >= 0 && range.j_lo < range.j_hi && range.j_hi <= n)) {
        throw config_error("position range outside the negatives");
    }
    if (m + n > 8) {
        throw size_guard_error("exhaustive search is limited to m + n <= 8");
    }
    const double norm_loss = 1.0 / (static_cast<double>(m) * static_cast<double>(range.width()));
    const double norm_phi = 1.0 / (static_cast<double>(m) * static_cast<double>(n));
    ScanBest scan = scan_permutations(score_all(w, data.positives), score_all(w, data.negatives),
                                      range.j_lo, range.j_hi, false, norm_loss, norm_phi);
    return scan.h;
}

double convexity_probe(const std::function<double(const std::vector<double> &)> &f,
                       const std::vector<double> &w1, const std::vector<double> &w2,
                       int samples) {
    if (w1.size() != w2.size()) {
        throw data_error("probe endpoints must share a dimension");
    }
    if (samples < 1) {
        throw config_error("probe needs at least one interior sample");
    }
    const double f1 = f(w1);
    const double f2 = f(w2);
    double worst = 0.0;
    std::vector<double> mix(w1.size());
    for (int i = 1; i <= samples; ++i) {
        const double lambda = static_cast<double>(i) / (samples + 1);
        for (std::size_t d = 0; d < mix.size(); ++d) {
            mix[d] = lambda * w1[d] + (1.0 - lambda) * w2[d];
        }
        worst = std::max(worst, f(mix) - (lambda * f1 + (1.0 - lambda) * f2));
    }
    return worst;
}

RandomInstance random_instance(std::uint64_t seed, int m, int n, int dim) {
    if (m < 1 || n < 1) {
        throw config_error("instance needs both classes");
    }
    if (dim < 1 || dim > 4) {
        throw config_error("generator covers dimensions 1..4");
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    auto draw = [&]() {
        FeatureVector x;
        for (int f = 0; f < dim; ++f) {
            x.entries.push_back({static_cast<std::uint32_t>(f), gauss(rng)});
        }
        return x;
    };

    RandomInstance inst;
    inst.data.dim = static_cast<std::uint32_t>(dim);
    for (int i = 0; i < m; ++i) {
        inst.data.positives.push_back(draw());
    }
    for (int j = 0; j < n; ++j) {
        inst.data.negatives.push_back(draw());
    }
    inst.w.resize(dim);
    for (double &v : inst.w) {
        v = gauss(rng);
    }
    return inst;
}

} // namespace pauc
