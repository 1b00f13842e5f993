#include <doctest.h>

#include <cmath>
#include <string>

#include "pauc/dataset.hpp"
#include "pauc/errors.hpp"
#include "pauc/model.hpp"

#include "helpers.hpp"

using namespace pauc;
using pauc::testing::frow;

TEST_CASE("svmlight parsing reads labels, indices, and values") {
    const Dataset data = parse_svmlight("+1 1:1.0 3:2.0\n-1 2:0.5\n");
    CHECK(data.m() == 1);
    CHECK(data.n() == 1);
    CHECK(data.dim == 3);
    REQUIRE(data.positives[0].entries.size() == 2);
    CHECK(data.positives[0].entries[0].index == 0);
    CHECK(data.positives[0].entries[0].value == 1.0);
    CHECK(data.positives[0].entries[1].index == 2);
    CHECK(data.positives[0].entries[1].value == 2.0);
    CHECK(data.negatives[0].entries[0].index == 1);
    CHECK(data.negatives[0].entries[0].value == 0.5);
}

TEST_CASE("svmlight parsing accepts bare 1 as the positive label") {
    const Dataset data = parse_svmlight("1 1:4\n-1 1:2\n");
    CHECK(data.m() == 1);
    CHECK(data.n() == 1);
}

TEST_CASE("svmlight parsing skips comments and blank lines") {
    const Dataset data = parse_svmlight("# header\n\n+1 1:1 # trailing\n\n-1 1:2\n# end\n");
    CHECK(data.m() == 1);
    CHECK(data.n() == 1);
}

TEST_CASE("svmlight parsing rejects degenerate inputs") {
    CHECK_THROWS_AS(parse_svmlight(""), empty_class_error);
    CHECK_THROWS_AS(parse_svmlight("-1 1:1\n-1 2:1\n"), empty_class_error);
    CHECK_THROWS_AS(parse_svmlight("+1 1:1\n+1 1:2\n"), empty_class_error);
}

TEST_CASE("svmlight parsing reports the offending line") {
    try {
        parse_svmlight("+1 1:1\n-1 1:oops\n");
        FAIL("expected parse_error");
    } catch (const parse_error &e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("2") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_svmlight("+2 1:1\n"), parse_error);      // unknown label
    CHECK_THROWS_AS(parse_svmlight("+1 0:1\n"), parse_error);      // 1-based indices
    CHECK_THROWS_AS(parse_svmlight("+1 2:1 1:2\n"), parse_error);  // decreasing index
    CHECK_THROWS_AS(parse_svmlight("+1 1:1 1:2\n"), parse_error);  // repeated index
    CHECK_THROWS_AS(parse_svmlight("+1 1:nan\n"), parse_error);    // non-finite value
    CHECK_THROWS_AS(parse_svmlight("+1 1\n"), parse_error);        // missing colon
}

TEST_CASE("parse/serialize round-trips a dataset exactly") {
    const Dataset data =
        parse_svmlight("+1 1:0.1 2:-3.25 4:1e-7\n+1 3:2\n-1 1:9.75\n-1 2:0.333333333333333\n");
    const Dataset again = parse_svmlight(serialize_svmlight(data));
    CHECK(again == data);
}

TEST_CASE("z-score normalization hits the two-point example") {
    Dataset data;
    data.dim = 1;
    data.positives.push_back(frow({1.0}));
    data.negatives.push_back(frow({3.0}));
    auto [normalized, stats] = normalize_zscore(data);
    CHECK(normalized.positives[0].entries[0].value == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(normalized.negatives[0].entries[0].value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(stats.means[0] == doctest::Approx(2.0));
    CHECK(stats.stds[0] == doctest::Approx(1.0));
}

TEST_CASE("constant columns are centered with a sentinel std of 1") {
    Dataset data;
    data.dim = 1;
    data.positives = {frow({5.0}), frow({5.0})};
    data.negatives = {frow({5.0})};
    auto [normalized, stats] = normalize_zscore(data);
    for (const auto &row : normalized.positives) {
        CHECK(row.entries[0].value == 0.0);
    }
    CHECK(normalized.negatives[0].entries[0].value == 0.0);
    CHECK(stats.stds[0] == 1.0);
}

TEST_CASE("normalized columns have zero mean and unit variance, absent entries counted as 0") {
    // Second feature is missing from two rows; the transform must treat those
    // slots as zeros when computing the statistics.
    const Dataset data = parse_svmlight("+1 1:2 2:1\n+1 1:4\n-1 1:1 2:5\n-1 1:7\n");
    auto [normalized, stats] = normalize_zscore(data);
    for (std::uint32_t f = 0; f < data.dim; ++f) {
        double sum = 0.0, sq = 0.0;
        int count = 0;
        for (const auto *side : {&normalized.positives, &normalized.negatives}) {
            for (const auto &row : *side) {
                double v = 0.0;
                for (const auto &e : row.entries) {
                    if (e.index == f) {
                        v = e.value;
                    }
                }
                sum += v;
                sq += v * v;
                ++count;
            }
        }
        const double mean = sum / count;
        const double var = sq / count - mean * mean;
        CHECK(std::fabs(mean) <= 1e-9);
        CHECK(std::fabs(var - 1.0) <= 1e-9);
    }
}

TEST_CASE("stored statistics replay the training transform") {
    const Dataset data = parse_svmlight("+1 1:2 2:1\n+1 1:4\n-1 1:1 2:5\n-1 1:7\n");
    auto [normalized, stats] = normalize_zscore(data);
    const Dataset replayed = apply_normalization(stats, data);
    CHECK(replayed == normalized);
}

TEST_CASE("score is a sparse dot product") {
    const std::vector<double> w{1.0, 2.0};
    CHECK(score(w, frow({3.0, 4.0})) == 11.0);
    CHECK(score(std::vector<double>{0.0, 0.0}, frow({3.0, 4.0})) == 0.0);
    FeatureVector unit;
    unit.entries.push_back({0, 1.0});
    CHECK(score(w, unit) == 1.0);
}

TEST_CASE("score rejects vectors wider than the weights") {
    FeatureVector wide;
    wide.entries.push_back({5, 1.0});
    CHECK_THROWS_AS(score(std::vector<double>{1.0, 2.0}, wide), data_error);
}

TEST_CASE("score is linear in the instance") {
    const std::vector<double> w{0.5, -2.0, 3.0};
    const FeatureVector x = frow({1.0, 2.0, 3.0});
    const FeatureVector y = frow({-4.0, 0.5, 2.0});
    const double a = 2.0, b = -3.0;
    FeatureVector combo;
    for (std::uint32_t f = 0; f < 3; ++f) {
        combo.entries.push_back({f, a * x.entries[f].value + b * y.entries[f].value});
    }
    CHECK(score(w, combo) ==
          doctest::Approx(a * score(w, x) + b * score(w, y)).epsilon(1e-12));
}
