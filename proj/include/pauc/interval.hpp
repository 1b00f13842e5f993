#pragma once

#include <cmath>
#include <string>

#include "pauc/errors.hpp"

namespace pauc {

/// False-positive-rate interval [alpha, beta] with 0 <= alpha < beta <= 1.
///
/// For a sample with n negatives the interval maps to the discrete position
/// range (j_alpha, j_beta] over the negatives sorted by decreasing score,
/// with j_alpha = floor(n*alpha) and j_beta = ceil(n*beta).  Since
/// alpha < beta implies j_beta > n*alpha >= j_alpha, the range is never
/// empty for any n >= 1.
struct FprInterval {
    double alpha = 0.0;
    double beta = 1.0;

    FprInterval() = default;

    FprInterval(double a, double b) : alpha(a), beta(b) {
        if (!(a >= 0.0) || !(b <= 1.0) || !(a < b)) {
            throw config_error("invalid FPR interval [" + std::to_string(a) + ", " +
                               std::to_string(b) + "]: need 0 <= alpha < beta <= 1");
        }
    }

    int j_alpha(int n) const { return static_cast<int>(std::floor(n * alpha)); }
    int j_beta(int n) const { return static_cast<int>(std::ceil(n * beta)); }
};

/// Discrete counterpart used internally: positions (j_lo, j_hi] over the
/// ranked negatives, 0 <= j_lo < j_hi <= n.
struct PositionRange {
    int j_lo = 0;
    int j_hi = 0;

    int width() const { return j_hi - j_lo; }
};

inline PositionRange positions_for(const FprInterval &iv, int n) {
    if (n < 1) {
        throw config_error("need at least one negative instance");
    }
    PositionRange r{iv.j_alpha(n), iv.j_beta(n)};
    if (!(r.j_lo >= 0 && r.j_lo < r.j_hi && r.j_hi <= n)) {
        throw config_error("degenerate position range for n=" + std::to_string(n));
    }
    return r;
}

} // namespace pauc
