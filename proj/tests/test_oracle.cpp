#include <doctest.h>

#include <cmath>
#include <set>
#include <vector>

#include "pauc/errors.hpp"
#include "pauc/metrics.hpp"
#include "pauc/model.hpp"
#include "pauc/oracle.hpp"
#include "pauc/surrogates.hpp"

#include "helpers.hpp"

using namespace pauc;
using pauc::testing::from_scores;

namespace {

// A matrix is realizable by a total order exactly when no two rows are
// incomparable as column sets, i.e. no 2x2 submatrix reads [[0,1],[1,0]] or
// [[1,0],[0,1]].
bool has_crossing(const OrderingMatrix &pi) {
    for (int i1 = 0; i1 < pi.m; ++i1) {
        for (int i2 = i1 + 1; i2 < pi.m; ++i2) {
            bool first_over = false;
            bool second_over = false;
            for (int j = 0; j < pi.k; ++j) {
                if (pi.at(i1, j) && !pi.at(i2, j)) {
                    first_over = true;
                }
                if (!pi.at(i1, j) && pi.at(i2, j)) {
                    second_over = true;
                }
            }
            if (first_over && second_over) {
                return true;
            }
        }
    }
    return false;
}

} // namespace

TEST_CASE("ordering enumeration matches the nested-subset counts") {
    CHECK(enumerate_valid_orderings(1, 1).size() == 2);
    CHECK(enumerate_valid_orderings(1, 2).size() == 4);
    CHECK(enumerate_valid_orderings(1, 3).size() == 8);
    CHECK(enumerate_valid_orderings(2, 2).size() == 14);
    // Ordered row pairs of nested subsets of k columns: 2*3^k - 2^k.
    CHECK(enumerate_valid_orderings(2, 3).size() == 46);
}

TEST_CASE("enumerated orderings are distinct and crossing-free") {
    const auto all = enumerate_valid_orderings(2, 3);
    std::set<std::vector<std::uint8_t>> seen;
    for (const OrderingMatrix &pi : all) {
        CHECK(pi.m == 2);
        CHECK(pi.k == 3);
        CHECK(!has_crossing(pi));
        CHECK(seen.insert(pi.bits).second);
    }
}

TEST_CASE("oracles refuse instances above their size guards") {
    CHECK_THROWS_AS(enumerate_valid_orderings(5, 4), size_guard_error);
    const auto inst = random_instance(1, 4, 6, 2);
    CHECK_THROWS_AS(brute_mvc(inst.w, inst.data, PositionRange{1, 5}, LossKind::pauc_tr),
                    size_guard_error);
    const auto big = random_instance(2, 4, 5, 2);
    CHECK_THROWS_AS(naive_struct_surrogate(big.w, big.data, PositionRange{1, 3}),
                    size_guard_error);
}

TEST_CASE("naive full-matrix surrogate vanishes under huge correct margins") {
    const Dataset data = from_scores({10.0, 12.0}, {0.0, 1.0, 2.0});
    CHECK(naive_struct_surrogate({1.0}, data, PositionRange{1, 3}) == 0.0);
    CHECK(naive_struct_surrogate({1.0}, data, PositionRange{0, 2}) == 0.0);
}

TEST_CASE("naive full-matrix surrogate upper-bounds the risk") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const int m = 1 + static_cast<int>(seed % 2);
        const int n = 3 + static_cast<int>(seed % 3);
        const auto inst = random_instance(seed + 600, m, n, 3);
        const auto sp = score_all(inst.w, inst.data.positives);
        const auto sn = score_all(inst.w, inst.data.negatives);
        const PositionRange interior{1, 2 + static_cast<int>(seed % (n - 1))};
        const PositionRange from_zero{0, 1 + static_cast<int>(seed % n)};
        for (const PositionRange &range : {interior, from_zero}) {
            const double naive = naive_struct_surrogate(inst.w, inst.data, range);
            CHECK(naive >= -1e-12);
            CHECK(naive >= 1.0 - empirical_pauc_positions(sp, sn, range) - 1e-9);
        }
        // Over the whole column range both normalizations coincide at
        // 1/(m*n) and every search reaches the same maximum.
        const PositionRange full{0, n};
        const double naive_full = naive_struct_surrogate(inst.w, inst.data, full);
        CHECK(std::abs(naive_full - tight_surrogate(inst.w, inst.data, full)) <= 1e-9);
        CHECK(std::abs(naive_full - hinge_surrogate(inst.w, inst.data, full)) <= 1e-9);
    }
}

TEST_CASE("full-matrix and tracked-subset surrogates do not dominate each other") {
    // One positive at 0 against negatives at 10 and -10.  The full-matrix
    // search charges rank mistakes across all m*n pairs at weight 1/(m*n)
    // while its loss term reads only the window at weight 1/(m*width), so
    // on narrow windows the tracked-subset value can exceed it.
    const Dataset data = from_scores({0.0}, {10.0, -10.0});
    const std::vector<double> w{1.0};

    const PositionRange interior{1, 2};
    CHECK(hinge_surrogate(w, data, interior) == 0.0);
    CHECK(eta_head(w, data, interior) == doctest::Approx(10.0));
    CHECK(tight_surrogate(w, data, interior) == doctest::Approx(10.0));
    CHECK(naive_struct_surrogate(w, data, interior) == doctest::Approx(5.0));

    const PositionRange top{0, 1};
    CHECK(hinge_surrogate(w, data, top) == doctest::Approx(11.0));
    CHECK(tight_surrogate(w, data, top) == doctest::Approx(11.0));
    CHECK(naive_struct_surrogate(w, data, top) == doctest::Approx(6.0));
}

TEST_CASE("convexity probe stays non-positive on convex functions") {
    auto quadratic = [](const std::vector<double> &w) {
        double s = 0.0;
        for (double f : w) {
            s += f * f;
        }
        return s;
    };
    CHECK(convexity_probe(quadratic, {1.0, -2.0}, {-3.0, 0.5}, 17) <= 1e-9);

    const auto inst = random_instance(31, 3, 5, 2);
    auto windowed_hinge = [&](const std::vector<double> &w) {
        return hinge_surrogate(w, inst.data, PositionRange{0, 3});
    };
    auto interior_tight = [&](const std::vector<double> &w) {
        return tight_surrogate(w, inst.data, PositionRange{1, 3});
    };
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto a = random_instance(seed + 700, 1, 1, 2);
        const auto b = random_instance(seed + 800, 1, 1, 2);
        CHECK(convexity_probe(windowed_hinge, a.w, b.w, 9) <= 1e-9);
        CHECK(convexity_probe(interior_tight, a.w, b.w, 9) <= 1e-9);
    }
}

TEST_CASE("convexity probe certifies the interior-window hinge as non-convex") {
    const Dataset data = pauc::testing::make_data(
        {{0.0, 0.0}}, {{0.0, -1.0}, {-1.0, 0.0}, {-1.0, -1.0}, {-1.0, -1.0}});
    auto hinge = [&](const std::vector<double> &w) {
        return hinge_surrogate(w, data, PositionRange{1, 2});
    };
    // An odd sample count puts lambda = 1/2 on the grid, where the violation
    // is exactly 1/2: the endpoints score 0 and the midpoint scores 1/2.
    CHECK(convexity_probe(hinge, {1.0, 0.0}, {0.0, 1.0}, 9) == 0.5);
}

TEST_CASE("seeded instances are reproducible") {
    const auto a = random_instance(5, 3, 4, 2);
    const auto b = random_instance(5, 3, 4, 2);
    CHECK(a.w == b.w);
    REQUIRE(a.data.m() == 3);
    REQUIRE(a.data.n() == 4);
    CHECK(a.data.dim == 2);
    for (int i = 0; i < a.data.m(); ++i) {
        CHECK(a.data.positives[i].entries.size() == b.data.positives[i].entries.size());
        for (std::size_t e = 0; e < a.data.positives[i].entries.size(); ++e) {
            CHECK(a.data.positives[i].entries[e].value ==
                  b.data.positives[i].entries[e].value);
        }
    }
    const auto c = random_instance(6, 3, 4, 2);
    CHECK(a.w != c.w);
}
