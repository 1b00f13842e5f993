#include "pauc/dataset.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "pauc/json_io.hpp"

namespace pauc {

void Dataset::require_both_classes() const {
    if (positives.empty()) {
        throw empty_class_error("dataset contains no positive instances");
    }
    if (negatives.empty()) {
        throw empty_class_error("dataset contains no negative instances");
    }
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// One whitespace-separated token starting at pos; advances pos past it.
std::string_view next_token(std::string_view line, std::size_t &pos) {
    while (pos < line.size() && is_space(line[pos])) {
        ++pos;
    }
    std::size_t start = pos;
    while (pos < line.size() && !is_space(line[pos])) {
        ++pos;
    }
    return line.substr(start, pos - start);
}

double parse_value(std::string_view text, std::size_t lineno) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw parse_error(lineno, "bad feature value '" + std::string(text) + "'");
    }
    if (!std::isfinite(v)) {
        throw parse_error(lineno, "non-finite feature value '" + std::string(text) + "'");
    }
    return v;
}

} // namespace

Dataset parse_svmlight(const std::string &text) {
    Dataset data;
    std::size_t lineno = 0;
    std::istringstream stream(text);
    std::string raw;
    while (std::getline(stream, raw)) {
        ++lineno;
        std::string_view line(raw);
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }

        std::size_t pos = 0;
        std::string_view label = next_token(line, pos);
        if (label.empty()) {
            continue; // blank or comment-only line
        }

        bool positive;
        if (label == "+1" || label == "1") {
            positive = true;
        } else if (label == "-1") {
            positive = false;
        } else {
            throw parse_error(lineno, "bad label '" + std::string(label) + "'");
        }

        FeatureVector x;
        long last_index = 0; // svmlight indices are 1-based
        for (std::string_view tok = next_token(line, pos); !tok.empty();
             tok = next_token(line, pos)) {
            std::size_t colon = tok.find(':');
            if (colon == std::string_view::npos || colon == 0 || colon + 1 == tok.size()) {
                throw parse_error(lineno, "expected idx:value, got '" + std::string(tok) + "'");
            }
            std::string_view idx_text = tok.substr(0, colon);
            long idx = 0;
            auto [ptr, ec] = std::from_chars(idx_text.data(), idx_text.data() + idx_text.size(), idx);
            if (ec != std::errc() || ptr != idx_text.data() + idx_text.size() || idx < 1) {
                throw parse_error(lineno, "bad feature index '" + std::string(idx_text) + "'");
            }
            if (idx <= last_index) {
                throw parse_error(lineno, "feature indices must be strictly increasing");
            }
            last_index = idx;
            double v = parse_value(tok.substr(colon + 1), lineno);
            x.entries.push_back({static_cast<std::uint32_t>(idx - 1), v});
        }

        data.dim = std::max(data.dim, x.dim());
        (positive ? data.positives : data.negatives).push_back(std::move(x));
    }
    data.require_both_classes();
    return data;
}

Dataset load_svmlight(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw data_error("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_svmlight(buf.str());
}

std::string serialize_svmlight(const Dataset &data) {
    std::string out;
    auto emit = [&out](const char *label, const std::vector<FeatureVector> &rows) {
        for (const FeatureVector &x : rows) {
            out += label;
            for (const auto &e : x.entries) {
                out += ' ';
                out += std::to_string(e.index + 1);
                out += ':';
                out += jsonio::number(e.value);
            }
            out += '\n';
        }
    };
    emit("+1", data.positives);
    emit("-1", data.negatives);
    return out;
}

void save_svmlight(const Dataset &data, const std::string &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw data_error("cannot write '" + path + "'");
    }
    out << serialize_svmlight(data);
}

std::pair<Dataset, NormStats> normalize_zscore(const Dataset &data) {
    data.require_both_classes();
    const std::size_t dim = data.dim;
    const double count = static_cast<double>(data.m() + data.n());

    NormStats stats;
    stats.means.assign(dim, 0.0);
    stats.stds.assign(dim, 0.0);

    auto for_each_row = [&data](auto &&fn) {
        for (const auto &x : data.positives) {
            fn(x);
        }
        for (const auto &x : data.negatives) {
            fn(x);
        }
    };

    for_each_row([&stats](const FeatureVector &x) {
        for (const auto &e : x.entries) {
            stats.means[e.index] += e.value;
        }
    });
    for (double &mu : stats.means) {
        mu /= count;
    }

    // Population variance in two passes; absent sparse entries are zeros and
    // contribute (0 - mean)^2.
    std::vector<double> sq(dim, 0.0);
    std::vector<double> present(dim, 0.0);
    for_each_row([&](const FeatureVector &x) {
        for (const auto &e : x.entries) {
            double c = e.value - stats.means[e.index];
            sq[e.index] += c * c;
            present[e.index] += 1.0;
        }
    });
    for (std::size_t f = 0; f < dim; ++f) {
        double var = (sq[f] + (count - present[f]) * stats.means[f] * stats.means[f]) / count;
        double sd = std::sqrt(std::max(var, 0.0));
        // Constant columns get the sentinel 1 and are centered only; the
        // threshold absorbs rounding residue from the mean computation.
        stats.stds[f] = (sd <= 1e-12 * std::max(1.0, std::fabs(stats.means[f]))) ? 1.0 : sd;
    }

    return {apply_normalization(stats, data), stats};
}

FeatureVector apply_normalization(const NormStats &stats, const FeatureVector &x) {
    if (x.dim() > stats.means.size()) {
        throw data_error("instance dimension exceeds normalization statistics");
    }
    FeatureVector out;
    out.entries.reserve(stats.means.size());
    std::size_t next = 0;
    for (std::uint32_t f = 0; f < stats.means.size(); ++f) {
        double raw = 0.0;
        if (next < x.entries.size() && x.entries[next].index == f) {
            raw = x.entries[next].value;
            ++next;
        }
        out.entries.push_back({f, (raw - stats.means[f]) / stats.stds[f]});
    }
    return out;
}

Dataset apply_normalization(const NormStats &stats, const Dataset &data) {
    Dataset out;
    out.dim = static_cast<std::uint32_t>(stats.means.size());
    out.positives.reserve(data.positives.size());
    out.negatives.reserve(data.negatives.size());
    for (const auto &x : data.positives) {
        out.positives.push_back(apply_normalization(stats, x));
    }
    for (const auto &x : data.negatives) {
        out.negatives.push_back(apply_normalization(stats, x));
    }
    return out;
}

} // namespace pauc
