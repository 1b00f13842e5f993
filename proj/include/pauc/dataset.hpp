#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pauc/errors.hpp"

namespace pauc {

/// Sparse feature vector; indices are 0-based internally, strictly increasing,
/// and every value is finite.
struct FeatureVector {
    struct Entry {
        std::uint32_t index;
        double value;

        bool operator==(const Entry &) const = default;
    };

    std::vector<Entry> entries;

    bool operator==(const FeatureVector &) const = default;

    /// Tightest upper bound on the indices used (0 for an empty vector).
    std::uint32_t dim() const {
        return entries.empty() ? 0 : entries.back().index + 1;
    }
};

/// Binary-labelled sample split by class.  dim bounds the indices of every
/// instance on either side.
struct Dataset {
    std::vector<FeatureVector> positives;
    std::vector<FeatureVector> negatives;
    std::uint32_t dim = 0;

    bool operator==(const Dataset &) const = default;

    int m() const { return static_cast<int>(positives.size()); }
    int n() const { return static_cast<int>(negatives.size()); }

    /// Throws empty_class_error unless both classes are non-empty.
    void require_both_classes() const;
};

/// Per-feature affine statistics of a z-score transform.  Features with zero
/// variance record the sentinel std 1 and are centered only.
struct NormStats {
    std::vector<double> means;
    std::vector<double> stds;
};

/// Parses svmlight-format text: one instance per line,
/// "<label> idx:val idx:val ..." with labels +1/1/-1 and 1-based indices.
/// '#' starts a comment that runs to the end of the line.  Throws parse_error
/// with the 1-based line number on malformed input and empty_class_error if
/// either class ends up empty.
Dataset parse_svmlight(const std::string &text);
Dataset load_svmlight(const std::string &path);

/// Writes the dataset back out in svmlight format (positives first), with
/// values at 17 significant digits so parse(serialize(d)) == d exactly.
std::string serialize_svmlight(const Dataset &data);
void save_svmlight(const Dataset &data, const std::string &path);

/// Z-scores every feature column over all m+n instances (population variance;
/// absent sparse entries count as zeros).  The transformed dataset is dense.
/// Applying the returned stats to held-out data replays the same transform.
std::pair<Dataset, NormStats> normalize_zscore(const Dataset &data);

FeatureVector apply_normalization(const NormStats &stats, const FeatureVector &x);
Dataset apply_normalization(const NormStats &stats, const Dataset &data);

} // namespace pauc
