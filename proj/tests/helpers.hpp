#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "pauc/dataset.hpp"

namespace pauc::testing {

inline FeatureVector frow(std::initializer_list<double> values) {
    FeatureVector row;
    std::uint32_t f = 0;
    for (double v : values) {
        row.entries.push_back({f++, v});
    }
    return row;
}

inline Dataset make_data(std::initializer_list<std::initializer_list<double>> pos,
                         std::initializer_list<std::initializer_list<double>> neg) {
    Dataset data;
    std::size_t dim = 0;
    for (auto row : pos) {
        data.positives.push_back(frow(row));
        dim = std::max(dim, row.size());
    }
    for (auto row : neg) {
        data.negatives.push_back(frow(row));
        dim = std::max(dim, row.size());
    }
    data.dim = static_cast<std::uint32_t>(dim);
    return data;
}

// 1-D embedding: each instance's single feature equals its intended score
// under w = (1), so score-level fixtures drive the ordering machinery.
inline Dataset from_scores(const std::vector<double> &pos, const std::vector<double> &neg) {
    Dataset data;
    data.dim = 1;
    for (double s : pos) {
        data.positives.push_back(frow({s}));
    }
    for (double s : neg) {
        data.negatives.push_back(frow({s}));
    }
    return data;
}

} // namespace pauc::testing
