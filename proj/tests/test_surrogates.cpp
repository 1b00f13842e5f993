#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "pauc/metrics.hpp"
#include "pauc/model.hpp"
#include "pauc/oracle.hpp"
#include "pauc/surrogates.hpp"

#include "helpers.hpp"

using namespace pauc;
using pauc::testing::from_scores;
using pauc::testing::make_data;

namespace {

// Smallest pairwise |s+ - s-| gap; scaling w by anything above 1/gap puts
// every pair outside the unit margin.
double min_pair_gap(const std::vector<double> &w, const Dataset &data) {
    const auto sp = score_all(w, data.positives);
    const auto sn = score_all(w, data.negatives);
    double gap = std::numeric_limits<double>::infinity();
    for (double p : sp) {
        for (double n : sn) {
            gap = std::min(gap, std::fabs(p - n));
        }
    }
    return gap;
}

double risk_at(const std::vector<double> &w, const Dataset &data,
               const PositionRange &range) {
    return 1.0 - empirical_pauc_positions(score_all(w, data.positives),
                                          score_all(w, data.negatives), range);
}

} // namespace

TEST_CASE("hinge surrogate at w = 0 is one") {
    const Dataset data = from_scores({1.0, 2.0}, {0.5, 1.5, 2.5});
    CHECK(hinge_surrogate({0.0}, data, PositionRange{1, 3}) == 1.0);
    CHECK(tight_surrogate({0.0}, data, PositionRange{1, 3}) == 1.0);
    CHECK(hinge_surrogate_auc({0.0}, data) == 1.0);
}

TEST_CASE("windowed hinge matches a direct pairwise evaluation") {
    const Dataset data = from_scores({1.2, 0.3}, {0.9, 0.0, -0.4});
    const std::vector<double> w{1.0};
    const PositionRange range{1, 3};
    // Window negatives rank 2nd and 3rd (scores 0.0 and -0.4); only the 0.3
    // positive pays: (1 - 0.3) + (1 - 0.7), normalized by m * width = 4.
    const double expected = ((1 - 0.3) + (1 - 0.7)) / 4.0;
    CHECK(hinge_surrogate(w, data, range) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(hinge_surrogate(w, data, FprInterval(0.34, 1.0)) ==
          doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("full-range hinge is the auc hinge") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto inst = random_instance(seed + 40, 3, 4, 3);
        CHECK(hinge_surrogate(inst.w, inst.data, PositionRange{0, 4}) ==
              doctest::Approx(hinge_surrogate_auc(inst.w, inst.data)).epsilon(1e-12));
    }
}

TEST_CASE("structural value equals the hinge when the window starts at rank zero") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const int m = 1 + static_cast<int>(seed % 3);
        const int n = 2 + static_cast<int>(seed % 4);
        const int j_hi = 1 + static_cast<int>(seed % n);
        const auto inst = random_instance(seed + 70, m, n, 3);
        const PositionRange range{0, j_hi};
        CHECK(std::fabs(tight_surrogate(inst.w, inst.data, range) -
                        hinge_surrogate(inst.w, inst.data, range)) <= 1e-9);
    }
}

TEST_CASE("hinge and structural values upper-bound the misranking risk") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const int m = 1 + static_cast<int>(seed % 3);
        const int n = 3 + static_cast<int>(seed % 3);
        const int j_lo = static_cast<int>(seed % 2);
        const int j_hi = j_lo + 1 + static_cast<int>(seed % (n - j_lo - 1));
        const auto inst = random_instance(seed + 200, m, n, 3);
        const PositionRange range{j_lo, j_hi};
        const double risk = risk_at(inst.w, inst.data, range);
        CHECK(hinge_surrogate(inst.w, inst.data, range) >= risk - 1e-9);
        CHECK(tight_surrogate(inst.w, inst.data, range) >= risk - 1e-9);
    }
}

TEST_CASE("characterization sandwich around the structural value") {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const int m = 1 + static_cast<int>(seed % 3);
        const int n = 3 + static_cast<int>(seed % 3);
        const int j_lo = 1 + static_cast<int>(seed % 2);
        const int j_hi = j_lo + 1 + static_cast<int>(seed % (n - j_lo));
        const auto inst = random_instance(seed + 300, m, n, 3);
        const PositionRange range{j_lo, j_hi};

        const double tight = tight_surrogate(inst.w, inst.data, range);
        const double lower = hinge_surrogate_restricted(inst.w, inst.data, range) +
                             eta_head_restricted(inst.w, inst.data, range);
        const double upper = hinge_surrogate(inst.w, inst.data, range) +
                             eta_head(inst.w, inst.data, range);
        CHECK(lower <= tight + 1e-9);
        CHECK(tight <= upper + 1e-9);

        // Outside the unit margin the upper bound is attained exactly.
        const double gap = min_pair_gap(inst.w, inst.data);
        if (gap > 1e-9) {
            std::vector<double> scaled = inst.w;
            for (double &f : scaled) {
                f *= 1.5 / gap;
            }
            CHECK(tight_surrogate(scaled, inst.data, range) ==
                  doctest::Approx(hinge_surrogate(scaled, inst.data, range) +
                                  eta_head(scaled, inst.data, range))
                      .epsilon(1e-9));
        }
    }
}

TEST_CASE("sandwich terms on a hand-computed sample") {
    // One positive at 0 against negatives at 2, 1, -5 with the window at
    // ranked position 2: all gaps are >= 1, so the structural value equals
    // hinge + eta = 2 + 2 exactly.
    const Dataset data = from_scores({0.0}, {2.0, 1.0, -5.0});
    const std::vector<double> w{1.0};
    const PositionRange range{1, 2};
    CHECK(eta_head(w, data, range) == 2.0);
    CHECK(eta_head_restricted(w, data, range) == 2.0);
    CHECK(hinge_surrogate(w, data, range) == 2.0);
    CHECK(hinge_surrogate_restricted(w, data, range) == 2.0);
    CHECK(tight_surrogate(w, data, range) == 4.0);
}

TEST_CASE("restricted terms drop positives ranked above the head block") {
    const Dataset data = from_scores({1.2}, {1.0, 0.9});
    const std::vector<double> w{1.0};
    const PositionRange range{1, 2};
    CHECK(hinge_surrogate(w, data, range) == doctest::Approx(0.7).epsilon(1e-12));
    CHECK(hinge_surrogate_restricted(w, data, range) == 0.0);
    CHECK(eta_head(w, data, range) == 0.0);
    CHECK(eta_head_restricted(w, data, range) == 0.0);
    // The structural maximizer pays the (negative) head-block term to claim
    // the window loss: (1.0 - 1.2) + 0.9 + (1 - 1.2) = 0.5, undercutting the
    // hinge value.  The interior-window structural surrogate is not an upper
    // bound on the hinge surrogate.
    CHECK(tight_surrogate(w, data, range) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("structural value undercuts the hinge on the paired-feature sample") {
    const Dataset data =
        make_data({{0.0, 0.0}}, {{0.0, -1.0}, {-1.0, 0.0}, {-1.0, -1.0}, {-1.0, -1.0}});
    const PositionRange range{1, 2};
    const std::vector<double> w1{1.0, 0.0};
    const std::vector<double> w2{0.0, 1.0};
    const std::vector<double> w3{0.5, 0.5};
    CHECK(hinge_surrogate(w1, data, range) == 0.0);
    CHECK(hinge_surrogate(w2, data, range) == 0.0);
    CHECK(hinge_surrogate(w3, data, range) == 0.5);
    CHECK(tight_surrogate(w1, data, range) == 0.0);
    CHECK(tight_surrogate(w2, data, range) == 0.0);
    CHECK(tight_surrogate(w3, data, range) == 0.0);
}
